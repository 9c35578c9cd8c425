#include "genco/condition.hpp"

#include "genco/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

namespace genco {

hechler_condition::hechler_condition(node stem, exclusion_map exclusions,
                                     std::optional<floor_rule> floor)
    : stem_(std::move(stem)), floor_(std::move(floor)) {
  for (auto& [key, values] : exclusions) {
    if (!is_prefix(stem_, key)) {
      throw condition_error("exclusion key " + render_sequence(key) + " does not extend stem " +
                            render_sequence(stem_));
    }
    if (!values.empty()) exclusions_.emplace(key, std::move(values));
  }
}

bool hechler_condition::admits_step(const node& v, const natural& z) const {
  if (floor_ && z <= (*floor_)(v.size())) return false;
  if (exclusions_.empty()) return true;
  auto it = exclusions_.find(v);
  return it == exclusions_.end() || !it->second.contains(z);
}

bool contains(const hechler_condition& t, const node& u) {
  const node& stem = t.stem();
  if (u.size() <= stem.size()) return is_prefix(u, stem);
  if (!is_prefix(stem, u)) return false;
  node v = stem;
  for (std::size_t level = stem.size(); level < u.size(); ++level) {
    if (!t.admits_step(v, u[level])) return false;
    v.push_back(u[level]);
  }
  return true;
}

std::set<natural> excluded_successors(const hechler_condition& t, const node& at) {
  if (!is_prefix(t.stem(), at) || !contains(t, at)) {
    throw condition_error("node " + render_sequence(at) + " is not in the condition above its stem");
  }
  std::set<natural> out;
  if (auto it = t.exclusions().find(at); it != t.exclusions().end()) out = it->second;
  if (t.floor()) {
    const natural bound = (*t.floor())(at.size());
    for (natural z = 0; z <= bound; ++z) out.insert(z);
  }
  return out;
}

hechler_condition restrict(const hechler_condition& t, const node& at) {
  if (!contains(t, at)) {
    throw condition_error("cannot restrict to " + render_sequence(at) + ": not in the condition");
  }
  if (is_prefix(at, t.stem())) return t;
  exclusion_map kept;
  for (const auto& [key, values] : t.exclusions()) {
    if (is_prefix(at, key)) kept.emplace(key, values);
  }
  return hechler_condition(at, std::move(kept), t.floor());
}

std::optional<hechler_condition> meet(const hechler_condition& lhs, const hechler_condition& rhs) {
  if (!comparable(lhs.stem(), rhs.stem())) {
    throw condition_error("meet of conditions with incomparable stems " +
                          render_sequence(lhs.stem()) + " and " + render_sequence(rhs.stem()));
  }
  const node& stem = lhs.stem().size() >= rhs.stem().size() ? lhs.stem() : rhs.stem();
  if (!contains(lhs, stem) || !contains(rhs, stem)) return std::nullopt;

  exclusion_map merged;
  for (const auto* side : {&lhs, &rhs}) {
    for (const auto& [key, values] : side->exclusions()) {
      if (is_prefix(stem, key)) merged[key].insert(values.begin(), values.end());
    }
  }
  std::optional<floor_rule> floor;
  if (lhs.floor() && rhs.floor()) {
    floor = pointwise_max(*lhs.floor(), *rhs.floor());
  } else {
    floor = lhs.floor() ? lhs.floor() : rhs.floor();
  }
  return hechler_condition(stem, std::move(merged), std::move(floor));
}

namespace {

// Least z admitted at v other than `avoid`.
natural least_admitted_except(const hechler_condition& t, const node& v, const natural& avoid) {
  natural z = t.floor() ? (*t.floor())(v.size()) + 1 : natural(0);
  while (z == avoid || !t.admits_step(v, z)) ++z;
  return z;
}

// Strict upper bound on every value mentioned by the exclusions of t.
natural exclusion_ceiling(const hechler_condition& t) {
  natural ceiling = 0;
  for (const auto& [key, values] : t.exclusions()) {
    for (const auto& e : key) ceiling = std::max(ceiling, natural(e + 1));
    if (!values.empty()) ceiling = std::max(ceiling, natural(*values.rbegin() + 1));
  }
  return ceiling;
}

// A node of T2 at `level` (> |stem|) that carries no exclusion atom and has none below it beyond
// the stem: every new entry exceeds all mentioned values and the floor.
node generic_node(const hechler_condition& t2, std::size_t level) {
  node v = t2.stem();
  const natural ceiling = exclusion_ceiling(t2);
  while (v.size() < level) {
    natural entry = ceiling;
    if (t2.floor()) entry = std::max(entry, natural((*t2.floor())(v.size()) + 1));
    v.push_back(entry);
  }
  return v;
}

}  // namespace

extends_result extends(const hechler_condition& t2, const hechler_condition& t1) {
  const node& s2 = t2.stem();
  const node& s1 = t1.stem();

  if (!contains(t1, s2)) return {verdict::no, s2};

  if (s2.size() < s1.size()) {
    // T2 branches at s2 while T1 is still a single path there.
    const natural& forced = s1[s2.size()];
    return {verdict::no, append(s2, least_admitted_except(t2, s2, forced))};
  }

  for (const auto& [key, values] : t1.exclusions()) {
    if (!is_prefix(s2, key) || !contains(t2, key)) continue;
    for (const auto& z : values) {
      if (t2.admits_step(key, z)) return {verdict::no, append(key, z)};
    }
  }

  if (t1.floor()) {
    const floor_rule& f1 = *t1.floor();
    auto violation_from = [&](std::size_t from) -> std::optional<std::size_t> {
      if (t2.floor()) return first_violation(*t2.floor(), f1, from);
      return from;
    };
    auto level = violation_from(s2.size());
    if (level && *level == s2.size()) {
      // Only one node lives at this level; its own exclusions may cover the gap.
      natural z = t2.floor() ? (*t2.floor())(*level) + 1 : natural(0);
      const natural top = f1(*level);
      for (; z <= top; ++z) {
        if (t2.admits_step(s2, z)) return {verdict::no, append(s2, z)};
      }
      level = violation_from(s2.size() + 1);
    }
    if (level) {
      node v = generic_node(t2, *level);
      natural z = t2.floor() ? (*t2.floor())(*level) + 1 : natural(0);
      return {verdict::no, append(std::move(v), std::move(z))};
    }
  }
  return {verdict::yes, std::nullopt};
}

bounded_result extends_bounded(const hechler_condition& t2, const hechler_condition& t1,
                               std::size_t depth, std::uint64_t width) {
  const node& s2 = t2.stem();
  for (std::size_t len = 0; len <= s2.size(); ++len) {
    node prefix(s2.begin(), s2.begin() + static_cast<std::ptrdiff_t>(len));
    if (!contains(t1, prefix)) return {false, prefix};
  }
  std::vector<node> frontier{s2};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<node> next;
    for (const auto& v : frontier) {
      for (std::uint64_t z = 0; z <= width; ++z) {
        if (!t2.admits_step(v, z)) continue;
        node child = append(v, z);
        if (!contains(t1, child)) return {false, child};
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return {true, std::nullopt};
}

bool stem_extends_avoiding(const node& t2, const node& t1, const help_set& a) {
  if (!is_prefix(t1, t2)) return false;
  for (std::size_t i = t1.size(); i < t2.size(); ++i) {
    if (a.member(t2[i])) return false;
  }
  return true;
}

extends_a_result extends_a(const hechler_condition& t2, const hechler_condition& t1,
                           const help_set& a) {
  auto inclusion = extends(t2, t1);
  if (inclusion.answer == verdict::no) {
    return {verdict::no, extends_a_failure::inclusion, inclusion.witness};
  }
  if (!stem_extends_avoiding(t2.stem(), t1.stem(), a)) {
    return {verdict::no, extends_a_failure::stem_avoidance, t2.stem()};
  }
  if (inclusion.answer == verdict::unknown) return {verdict::unknown, extends_a_failure::none, {}};
  return {verdict::yes, extends_a_failure::none, {}};
}

bool is_well_formed(const hechler_condition& t) {
  return std::all_of(t.exclusions().begin(), t.exclusions().end(), [&](const auto& entry) {
    return is_prefix(t.stem(), entry.first) && !entry.second.empty();
  });
}

std::string render(const hechler_condition& t) {
  std::string out = "stem=" + render_sequence(t.stem()) + ";excl{";
  bool first = true;
  for (const auto& [key, values] : t.exclusions()) {
    if (!first) out += ';';
    first = false;
    out += render_sequence(key) + ":{";
    bool first_value = true;
    for (const auto& z : values) {
      if (!first_value) out += ',';
      first_value = false;
      out += z.str();
    }
    out += '}';
  }
  out += "};floor(";
  if (const auto& f = t.floor()) {
    out += "table=" + render_sequence(f->table) + ",a=" + f->slope.str() + ",b=" +
           f->intercept.str();
  } else {
    out += '-';
  }
  out += ')';
  return out;
}

namespace {

class cursor {
 public:
  explicit cursor(std::string_view text) : text_(text) {}

  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) {
      fail("expected '" + std::string(token) + "'");
    }
    pos_ += token.size();
  }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  natural number() {
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return parse_natural(text_.substr(start, pos_ - start));
  }

  node sequence() {
    expect("[");
    node out;
    if (accept("]")) return out;
    do {
      out.push_back(number());
    } while (accept(","));
    expect("]");
    return out;
  }

  void finish() {
    if (pos_ != text_.size()) fail("trailing characters");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw malformed_input("condition repr at offset " + std::to_string(pos_) + ": " + message);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

hechler_condition parse_condition(std::string_view text) {
  cursor in(text);
  in.expect("stem=");
  node stem = in.sequence();
  in.expect(";excl{");
  exclusion_map exclusions;
  if (!in.peek('}')) {
    do {
      node key = in.sequence();
      in.expect(":{");
      std::set<natural> values;
      if (!in.peek('}')) {
        do {
          values.insert(in.number());
        } while (in.accept(","));
      }
      in.expect("}");
      exclusions[std::move(key)] = std::move(values);
    } while (in.accept(";"));
  }
  in.expect("};floor(");
  std::optional<floor_rule> floor;
  if (!in.accept("-")) {
    floor_rule f;
    in.expect("table=");
    f.table = in.sequence();
    in.expect(",a=");
    f.slope = in.number();
    in.expect(",b=");
    f.intercept = in.number();
    floor = std::move(f);
  }
  in.expect(")");
  in.finish();
  try {
    return hechler_condition(std::move(stem), std::move(exclusions), std::move(floor));
  } catch (const condition_error& e) {
    throw malformed_input(std::string("condition repr: ") + e.what());
  }
}

}  // namespace genco
