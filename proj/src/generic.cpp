#include "genco/generic.hpp"

#include "genco/coding.hpp"
#include "genco/errors.hpp"
#include "genco/serialization.hpp"

#include <map>
#include <memory>
#include <sstream>

namespace genco {

namespace {

const hechler_condition& condition_of(const transcript_entry& e) {
  return std::visit([](const auto& v) -> const hechler_condition& { return v.condition; }, e);
}

std::vector<std::shared_ptr<const dense_set>> instantiate(const std::vector<dense_spec>& roster) {
  std::vector<std::shared_ptr<const dense_set>> out;
  out.reserve(roster.size());
  for (const auto& spec : roster) out.push_back(make_dense_set(spec));
  return out;
}

run_transcript build(const std::vector<dense_spec>& roster, const help_set& a,
                     const eventually_periodic* x, std::uint64_t steps, std::uint64_t fuel) {
  run_transcript out;
  out.header.roster_hash = roster_hash(roster);
  out.header.help_json = canonical(to_json(a));
  out.header.target_json = x ? canonical(to_json(*x)) : std::string(kNullTarget);
  out.header.steps = steps;

  const auto dense = instantiate(roster);
  hechler_condition current = full_tree();
  for (std::uint64_t step = 0; step < steps; ++step) {
    try {
      if (!dense.empty()) {
        const std::uint64_t i = step % dense.size();
        current = extend_in_a(current, *dense[i], a, fuel);
        out.entries.push_back(meet_entry{i, current});
      }
      if (x) {
        current = code_step(current, a, (*x)(step), fuel);
        out.entries.push_back(code_entry{step, current.stem().back(), current});
      }
    } catch (const fuel_exhausted& e) {
      throw fuel_exhausted(std::string(e.what()) + " (step " + std::to_string(step) + ")", step);
    }
  }
  out.g = current.stem();
  return out;
}

}  // namespace

run_transcript build_coded_generic(const std::vector<dense_spec>& roster, const help_set& a,
                                   const eventually_periodic& x, std::uint64_t steps,
                                   std::uint64_t fuel) {
  return build(roster, a, &x, steps, fuel);
}

run_transcript build_plain_generic(const std::vector<dense_spec>& roster, std::uint64_t steps,
                                   std::uint64_t fuel) {
  return build(roster, help_set::empty(), nullptr, steps, fuel);
}

std::string render_transcript(const run_transcript& t) {
  std::string out;
  out += "ROSTER " + t.header.roster_hash + "\n";
  out += "HELP " + t.header.help_json + "\n";
  out += "TARGET " + t.header.target_json + "\n";
  out += "STEPS " + std::to_string(t.header.steps) + "\n";
  for (const auto& entry : t.entries) {
    if (const auto* m = std::get_if<meet_entry>(&entry)) {
      out += "MEET " + std::to_string(m->roster_index) + " " + render(m->condition) + "\n";
    } else {
      const auto& c = std::get<code_entry>(entry);
      out += "CODE " + std::to_string(c.code_index) + " " + c.z.str() + " " + render(c.condition) +
             "\n";
    }
  }
  out += "G " + render_sequence(t.g) + "\n";
  return out;
}

namespace {

std::uint64_t parse_index(std::string_view token, std::size_t line) {
  try {
    natural value = parse_natural(token);
    if (value > std::numeric_limits<std::uint64_t>::max()) throw malformed_input("too large");
    return static_cast<std::uint64_t>(value);
  } catch (const malformed_input&) {
    throw malformed_input("transcript line " + std::to_string(line) + ": bad index '" +
                          std::string(token) + "'");
  }
}

// Splits off the first space-separated token.
std::string_view take_token(std::string_view& rest) {
  auto space = rest.find(' ');
  auto token = rest.substr(0, space);
  rest = space == std::string_view::npos ? std::string_view{} : rest.substr(space + 1);
  return token;
}

}  // namespace

run_transcript parse_transcript(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
  }
  auto fail = [](std::size_t line, const std::string& message) -> malformed_input {
    return malformed_input("transcript line " + std::to_string(line) + ": " + message);
  };
  auto header_value = [&](std::size_t index, std::string_view tag) {
    if (index >= lines.size()) throw fail(index + 1, "missing " + std::string(tag) + " header");
    std::string_view line = lines[index];
    if (line.substr(0, tag.size() + 1) != std::string(tag) + " ") {
      throw fail(index + 1, "expected " + std::string(tag) + " header");
    }
    return std::string(line.substr(tag.size() + 1));
  };

  run_transcript out;
  out.header.roster_hash = header_value(0, "ROSTER");
  out.header.help_json = header_value(1, "HELP");
  out.header.target_json = header_value(2, "TARGET");
  out.header.steps = parse_index(header_value(3, "STEPS"), 4);

  bool footer_seen = false;
  for (std::size_t i = 4; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view rest = lines[i];
    if (rest.empty()) continue;
    if (footer_seen) throw fail(line_no, "content after footer");
    auto tag = take_token(rest);
    try {
      if (tag == "MEET") {
        auto index = parse_index(take_token(rest), line_no);
        out.entries.push_back(meet_entry{index, parse_condition(rest)});
      } else if (tag == "CODE") {
        auto index = parse_index(take_token(rest), line_no);
        auto z = parse_natural(take_token(rest));
        out.entries.push_back(code_entry{index, std::move(z), parse_condition(rest)});
      } else if (tag == "G") {
        out.g = parse_sequence(rest);
        footer_seen = true;
      } else {
        throw fail(line_no, "unknown record '" + std::string(tag) + "'");
      }
    } catch (const malformed_input& e) {
      if (std::string_view(e.what()).starts_with("transcript line")) throw;
      throw fail(line_no, e.what());
    }
  }
  if (!footer_seen) throw fail(lines.size(), "missing G footer");
  return out;
}

node extract_g(const run_transcript& t) {
  node last = t.entries.empty() ? node{} : condition_of(t.entries.back()).stem();
  if (last != t.g) throw malformed_input("footer G disagrees with the final condition's stem");
  return last;
}

namespace {

// Collects failures per named check and emits a single PASS line for each clean check.
class report_builder {
 public:
  void declare(const std::string& check) {
    if (!failures_.contains(check)) {
      order_.push_back(check);
      failures_[check] = 0;
    }
  }

  void fail(const std::string& check, std::string locus, std::string detail) {
    declare(check);
    ++failures_[check];
    report_.fail(check, std::move(locus), std::move(detail));
  }

  verification_report finish() {
    verification_report out;
    for (const auto& check : order_) {
      if (failures_[check] == 0) out.pass(check);
    }
    for (auto& e : report_.entries) out.entries.push_back(std::move(e));
    return out;
  }

 private:
  std::vector<std::string> order_;
  std::map<std::string, std::size_t> failures_;
  verification_report report_;
};

std::string entry_locus(std::size_t index) { return "entry " + std::to_string(index); }

}  // namespace

verification_report verify_transcript(const std::vector<dense_spec>& roster, const help_set& a,
                                      const std::optional<eventually_periodic>& x,
                                      const run_transcript& t) {
  report_builder report;
  for (const char* check : {"header", "schedule", "chain", "meet-member", "meet-avoids-A",
                            "code-step", "coverage", "footer", "decode"}) {
    report.declare(check);
  }

  // Header.
  if (t.header.roster_hash != roster_hash(roster)) {
    report.fail("header", "ROSTER", "roster hash " + t.header.roster_hash + " does not match");
  }
  if (t.header.help_json != canonical(to_json(a))) {
    report.fail("header", "HELP", "help set " + t.header.help_json + " does not match");
  }
  const std::string expected_target = x ? canonical(to_json(*x)) : std::string(kNullTarget);
  if (t.header.target_json != expected_target) {
    report.fail("header", "TARGET", "target " + t.header.target_json + " does not match");
  }

  // Schedule: the (cycled) roster index and code index each entry must carry.
  {
    std::size_t expected_entries = 0;
    if (!roster.empty()) expected_entries += t.header.steps;
    if (x) expected_entries += t.header.steps;
    if (t.entries.size() != expected_entries) {
      report.fail("schedule", "STEPS",
                  std::to_string(t.entries.size()) + " entries for " +
                      std::to_string(t.header.steps) + " steps");
    }
    std::size_t index = 0;
    for (std::uint64_t step = 0; step < t.header.steps && index < t.entries.size(); ++step) {
      if (!roster.empty() && index < t.entries.size()) {
        const auto* m = std::get_if<meet_entry>(&t.entries[index]);
        if (m == nullptr || m->roster_index != step % roster.size()) {
          report.fail("schedule", entry_locus(index),
                      "expected MEET " + std::to_string(step % roster.size()));
        }
        ++index;
      }
      if (x && index < t.entries.size()) {
        const auto* c = std::get_if<code_entry>(&t.entries[index]);
        if (c == nullptr || c->code_index != step) {
          report.fail("schedule", entry_locus(index), "expected CODE " + std::to_string(step));
        }
        ++index;
      }
    }
  }

  const auto dense = instantiate(roster);
  std::vector<bool> met(roster.size(), false);
  hechler_condition previous = full_tree();
  std::size_t codes = 0;

  for (std::size_t index = 0; index < t.entries.size(); ++index) {
    const auto& entry = t.entries[index];
    const hechler_condition& current = condition_of(entry);
    const std::string locus = entry_locus(index);

    if (!is_well_formed(current)) {
      report.fail("chain", locus, "condition is not well formed");
    } else {
      auto inclusion = extends(current, previous);
      if (inclusion.answer == verdict::no) {
        report.fail("chain", locus,
                    "not below its predecessor; witness " + render_sequence(*inclusion.witness));
      } else if (inclusion.answer == verdict::unknown) {
        auto bounded = extends_bounded(current, previous, 6, 64);
        if (!bounded.consistent) {
          report.fail("chain", locus,
                      "bounded search found " + render_sequence(*bounded.witness) +
                          " outside its predecessor");
        }
      }
    }

    if (const auto* m = std::get_if<meet_entry>(&entry)) {
      if (m->roster_index >= dense.size()) {
        report.fail("meet-member", locus, "roster index out of range");
      } else if (dense[m->roster_index]->member(current) != membership::yes) {
        report.fail("meet-member", locus,
                    "condition is not in " + describe(roster[m->roster_index]));
      } else {
        met[m->roster_index] = true;
      }
      auto avoid = extends_a(current, previous, a);
      if (avoid.answer != verdict::yes) {
        report.fail("meet-avoids-A", locus,
                    avoid.reason == extends_a_failure::stem_avoidance
                        ? "new stem entries hit the help set"
                        : "not an extension of its predecessor");
      }
    } else {
      const auto& c = std::get<code_entry>(entry);
      const node expected_stem = append(previous.stem(), c.z);
      if (current.stem() != expected_stem) {
        report.fail("code-step", locus,
                    "stem " + render_sequence(current.stem()) + " is not predecessor stem + " +
                        c.z.str());
      }
      if (!x) {
        report.fail("code-step", locus, "CODE entry in a plain transcript");
      } else if (!a.member(c.z)) {
        report.fail("code-step", locus, c.z.str() + " is not in the help set");
      } else {
        try {
          const auto label = eta(a, c.z);
          if (label != (*x)(c.code_index)) {
            report.fail("code-step", locus,
                        "label " + std::to_string(label) + " != x(" +
                            std::to_string(c.code_index) + ") = " +
                            std::to_string((*x)(c.code_index)));
          }
        } catch (const std::exception& e) {
          report.fail("code-step", locus, e.what());
        }
      }
      ++codes;
    }
    previous = current;
  }

  const std::size_t must_meet = std::min<std::uint64_t>(roster.size(), t.header.steps);
  for (std::size_t i = 0; i < must_meet; ++i) {
    if (!met[i]) report.fail("coverage", "roster " + std::to_string(i), "never met");
  }

  if (previous.stem() != t.g) {
    report.fail("footer", "G",
                render_sequence(t.g) + " differs from final stem " +
                    render_sequence(previous.stem()));
  }

  if (x) {
    try {
      const auto decoded = decode(a, t.g);
      const auto wanted = x->take(codes);
      if (decoded.size() < wanted.size() ||
          !std::equal(wanted.begin(), wanted.end(), decoded.begin())) {
        report.fail("decode", "G",
                    "decoded " + render_sequence(decoded) + " does not start with " +
                        render_sequence(wanted));
      }
    } catch (const std::exception& e) {
      report.fail("decode", "G", e.what());
    }
  }
  return report.finish();
}

}  // namespace genco
