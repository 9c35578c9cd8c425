#include "genco/dense.hpp"

#include "genco/coding.hpp"
#include "genco/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace genco {

namespace {

class stem_length_set final : public stem_dense_set {
 public:
  explicit stem_length_set(stem_length spec) : n_(spec.n) {}

  membership member(const hechler_condition& t) const override {
    return t.stem().size() >= n_ ? membership::yes : membership::no;
  }

  std::optional<hechler_condition> member_witness(const node& s) const override {
    if (s.size() < n_) return std::nullopt;
    return hechler_condition(s);
  }

  std::optional<natural> next_good_successor(const node&, const natural& from) const override {
    return from;
  }

  node rank_key(const node& s) const override {
    return node{natural(std::min<std::uint64_t>(s.size(), n_))};
  }

 private:
  std::uint64_t n_;
};

class stem_hits_set final : public stem_dense_set {
 public:
  explicit stem_hits_set(stem_hits spec) : k_(std::move(spec.k)) {}

  membership member(const hechler_condition& t) const override {
    return hit(t.stem()) ? membership::yes : membership::no;
  }

  std::optional<hechler_condition> member_witness(const node& s) const override {
    if (!hit(s)) return std::nullopt;
    return hechler_condition(s);
  }

  std::optional<natural> next_good_successor(const node& s, const natural& from) const override {
    if (hit(s)) return from;
    return std::max(from, k_);
  }

  node rank_key(const node& s) const override { return node{natural(hit(s) ? 1 : 0)}; }

 private:
  bool hit(const node& s) const {
    return std::any_of(s.begin(), s.end(), [&](const natural& e) { return e >= k_; });
  }

  natural k_;
};

class user_stems_set final : public stem_dense_set {
 public:
  explicit user_stems_set(user_stems spec) : patterns_(std::move(spec.patterns)) {
    if (patterns_.empty()) throw std::invalid_argument("user_stems needs at least one pattern");
    for (const auto& p : patterns_) {
      length_cap_ = std::max<std::uint64_t>({length_cap_, p.min_len, p.tail.size()});
      tail_cap_ = std::max<std::size_t>(tail_cap_, p.tail.size());
      for (const auto& lo : p.tail) threshold_cap_ = std::max(threshold_cap_, lo);
    }
  }

  membership member(const hechler_condition& t) const override {
    const node& stem = t.stem();
    for (std::size_t len = stem.size() + 1; len-- > 0;) {
      node s(stem.begin(), stem.begin() + static_cast<std::ptrdiff_t>(len));
      for (const auto& p : patterns_) {
        if (!matches(p, s)) continue;
        if (extends(t, witness(p, s)).answer == verdict::yes) return membership::yes;
      }
    }
    return membership::no;
  }

  std::optional<hechler_condition> member_witness(const node& s) const override {
    for (const auto& p : patterns_) {
      if (matches(p, s)) return witness(p, s);
    }
    return std::nullopt;
  }

  std::optional<natural> next_good_successor(const node& s, const natural& from) const override {
    const std::uint64_t rank = closed_rank(s);
    if (rank == 0) return from;
    std::optional<natural> threshold;
    for (const auto& p : patterns_) {
      if (appends_needed(p, s) != rank) continue;
      const std::size_t r = p.tail.size();
      natural lo = rank <= r ? p.tail[r - rank] : natural(0);
      if (!threshold || lo < *threshold) threshold = std::move(lo);
    }
    return std::max(from, *threshold);
  }

  node rank_key(const node& s) const override {
    node key{natural(std::min<std::uint64_t>(s.size(), length_cap_))};
    const std::size_t keep = std::min(s.size(), tail_cap_);
    for (std::size_t i = s.size() - keep; i < s.size(); ++i) {
      key.push_back(std::min(s[i], threshold_cap_));
    }
    return key;
  }

 private:
  static bool matches(const stem_pattern& p, const node& s) {
    const std::size_t r = p.tail.size();
    if (s.size() < std::max<std::uint64_t>(p.min_len, r)) return false;
    for (std::size_t i = 0; i < r; ++i) {
      if (s[s.size() - r + i] < p.tail[i]) return false;
    }
    return true;
  }

  static hechler_condition witness(const stem_pattern& p, const node& s) {
    return hechler_condition(s, {}, p.floor);
  }

  // Fewest entries to append to s so that the result matches p.
  static std::uint64_t appends_needed(const stem_pattern& p, const node& s) {
    const std::uint64_t r = p.tail.size();
    const std::uint64_t need = std::max<std::uint64_t>(p.min_len, r);
    const std::uint64_t k0 = need > s.size() ? need - s.size() : 0;
    for (std::uint64_t k = k0; k < r; ++k) {
      // Keep the last r-k entries of s as the head of the tail.
      const std::uint64_t kept = r - k;
      if (s.size() < kept) continue;
      bool ok = true;
      for (std::uint64_t i = 0; i < kept && ok; ++i) ok = s[s.size() - kept + i] >= p.tail[i];
      if (ok) return k;
    }
    return std::max(k0, r);
  }

  std::uint64_t closed_rank(const node& s) const {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (const auto& p : patterns_) best = std::min(best, appends_needed(p, s));
    return best;
  }

  std::vector<stem_pattern> patterns_;
  std::uint64_t length_cap_ = 0;
  std::size_t tail_cap_ = 0;
  natural threshold_cap_ = 0;
};

class dominate_set final : public pruning_dense_set {
 public:
  explicit dominate_set(dominate spec) : f_(std::move(spec.f)) {}

  // Exact: T is in the set iff T is included in the tree with T's stem and floor f.
  membership member(const hechler_condition& t) const override {
    const auto answer = extends(t, hechler_condition(t.stem(), {}, f_)).answer;
    if (answer == verdict::yes) return membership::yes;
    return answer == verdict::no ? membership::no : membership::unknown;
  }

  hechler_condition refine(const hechler_condition& t) const override {
    floor_rule floor = t.floor() ? pointwise_max(*t.floor(), f_) : f_;
    return hechler_condition(t.stem(), t.exclusions(), std::move(floor));
  }

 private:
  floor_rule f_;
};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string render_floor_args(const floor_rule& f) {
  return "table=" + render_sequence(f.table) + ",a=" + f.slope.str() + ",b=" + f.intercept.str();
}

}  // namespace

std::string describe(const dense_spec& spec) {
  return std::visit(
      overloaded{
          [](const stem_length& s) { return "stem_length(" + std::to_string(s.n) + ")"; },
          [](const dominate& s) { return "dominate(" + render_floor_args(s.f) + ")"; },
          [](const stem_hits& s) { return "stem_hits(" + s.k.str() + ")"; },
          [](const user_stems& s) {
            return "user_stems(" + std::to_string(s.patterns.size()) + " patterns)";
          },
      },
      spec);
}

std::shared_ptr<const dense_set> make_dense_set(const dense_spec& spec) {
  return std::visit(
      overloaded{
          [](const stem_length& s) -> std::shared_ptr<const dense_set> {
            return std::make_shared<stem_length_set>(s);
          },
          [](const dominate& s) -> std::shared_ptr<const dense_set> {
            return std::make_shared<dominate_set>(s);
          },
          [](const stem_hits& s) -> std::shared_ptr<const dense_set> {
            return std::make_shared<stem_hits_set>(s);
          },
          [](const user_stems& s) -> std::shared_ptr<const dense_set> {
            return std::make_shared<user_stems_set>(s);
          },
      },
      spec);
}

namespace {

class rank_search {
 public:
  rank_search(const stem_dense_set& d, std::uint64_t width) : d_(d), width_(width) {}

  std::optional<std::uint64_t> solve(const node& t, std::uint64_t budget) {
    if (d_.member_witness(t)) return 0;
    if (budget == 0 || width_ == 0) return std::nullopt;
    auto key = std::make_pair(d_.rank_key(t), budget);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const std::uint64_t quorum = (width_ + 1) / 2;
    std::vector<std::uint64_t> ranks;
    natural from = 0;
    for (std::uint64_t i = 0; i < width_; ++i) {
      auto z = d_.next_good_successor(t, from);
      if (!z) break;
      if (auto r = solve(append(t, *z), budget - 1)) ranks.push_back(*r);
      from = *z + 1;
    }
    std::optional<std::uint64_t> result;
    if (ranks.size() >= quorum) {
      std::nth_element(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(quorum - 1),
                       ranks.end());
      result = ranks[quorum - 1] + 1;
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  const stem_dense_set& d_;
  std::uint64_t width_;
  std::map<std::pair<node, std::uint64_t>, std::optional<std::uint64_t>> memo_;
};

class fuel_gauge {
 public:
  explicit fuel_gauge(std::uint64_t fuel) : left_(fuel) {}

  void spend(const char* what) {
    if (left_ == 0) throw fuel_exhausted(std::string("fuel exhausted during ") + what);
    --left_;
  }

 private:
  std::uint64_t left_;
};

}  // namespace

std::optional<std::uint64_t> rank_bounded(const stem_dense_set& d, const node& t,
                                          std::uint64_t max_rank, std::uint64_t width) {
  return rank_search(d, width).solve(t, max_rank);
}

hechler_condition extend_in_a(const hechler_condition& t, const dense_set& d, const help_set& a,
                              std::uint64_t fuel) {
  if (const auto* pruning = dynamic_cast<const pruning_dense_set*>(&d)) {
    hechler_condition refined = pruning->refine(t);
    if (refined.stem() != t.stem()) {
      throw contract_violation("pruning refinement moved the stem");
    }
    auto out = meet(refined, t);
    if (!out) throw contract_violation("pruning refinement is incompatible with the condition");
    return *std::move(out);
  }
  const auto* stems = dynamic_cast<const stem_dense_set*>(&d);
  if (stems == nullptr) throw std::invalid_argument("unsupported dense set presentation");

  fuel_gauge gauge(fuel);
  node current = t.stem();
  while (true) {
    gauge.spend("dense-set descent");
    if (auto w = stems->member_witness(current)) {
      if (w->stem() != current) {
        throw contract_violation("witness stem " + render_sequence(w->stem()) +
                                 " differs from requested stem " + render_sequence(current));
      }
      auto out = meet(*w, restrict(t, current));
      if (!out) throw contract_violation("witness at " + render_sequence(current) + " is empty");
      return *std::move(out);
    }
    natural from = t.floor() ? (*t.floor())(current.size()) + 1 : natural(0);
    while (true) {
      gauge.spend("successor scan");
      auto z = stems->next_good_successor(current, from);
      if (!z) {
        throw fuel_exhausted("good-successor enumeration ran dry at " + render_sequence(current));
      }
      if (t.admits_step(current, *z) && !a.member(*z)) {
        current.push_back(*std::move(z));
        break;
      }
      from = *z + 1;
    }
  }
}

hechler_condition code_step(const hechler_condition& t, const help_set& a, std::uint64_t m,
                            std::uint64_t fuel) {
  if (a.which() == help_set::kind::empty) {
    throw std::invalid_argument("cannot encode into the empty help set");
  }
  for (std::uint64_t k = 0; k < fuel; ++k) {
    natural z = eta_fiber_element(a, m, k);
    if (t.admits_step(t.stem(), z)) return restrict(t, append(t.stem(), std::move(z)));
  }
  throw fuel_exhausted("no admissible fiber element for label " + std::to_string(m));
}

}  // namespace genco
