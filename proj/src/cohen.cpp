#include "genco/cohen.hpp"

#include "genco/errors.hpp"
#include "genco/natural.hpp"

#include <algorithm>
#include <stdexcept>

namespace genco {

std::string render_bits(const bit_string& bits) {
  if (bits.empty()) return "-";
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out += static_cast<char>('0' + b);
  return out;
}

bit_string parse_bits(std::string_view text) {
  if (text == "-") return {};
  if (text.empty()) throw malformed_input("empty bit string (use '-')");
  bit_string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw malformed_input("bit string contains '" + std::string(1, c) + "'");
    }
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

namespace {

bool ends_with(const bit_string& p, const bit_string& w) {
  return p.size() >= w.size() && std::equal(w.begin(), w.end(), p.end() - static_cast<std::ptrdiff_t>(w.size()));
}

// Shortest completion of p that ends with w.
bit_string complete_with(const bit_string& p, const bit_string& w) {
  for (std::size_t overlap = std::min(p.size(), w.size()) + 1; overlap-- > 0;) {
    if (std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(overlap),
                   p.end() - static_cast<std::ptrdiff_t>(overlap))) {
      bit_string out = p;
      out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(overlap), w.end());
      return out;
    }
  }
  return p;  // unreachable: overlap 0 always matches
}

class contains_set final : public cohen_dense {
 public:
  explicit contains_set(bit_string w) : w_(std::move(w)) {}

  bool member(const bit_string& p) const override {
    return std::search(p.begin(), p.end(), w_.begin(), w_.end()) != p.end();
  }

  bit_string extend(const bit_string& p) const override {
    if (member(p)) return p;
    return complete_with(p, w_);
  }

 private:
  bit_string w_;
};

class min_length_set final : public cohen_dense {
 public:
  explicit min_length_set(std::uint64_t n) : n_(n) {}

  bool member(const bit_string& p) const override { return p.size() >= n_; }

  bit_string extend(const bit_string& p) const override {
    bit_string out = p;
    if (out.size() < n_) out.resize(n_, 0);
    return out;
  }

 private:
  std::uint64_t n_;
};

class ends_with_set final : public cohen_dense {
 public:
  explicit ends_with_set(bit_string w) : w_(std::move(w)) {}

  bool member(const bit_string& p) const override { return ends_with(p, w_); }

  bit_string extend(const bit_string& p) const override {
    if (member(p)) return p;
    return complete_with(p, w_);
  }

 private:
  bit_string w_;
};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::uint8_t target_bit(const eventually_periodic& x, std::size_t j) {
  const auto v = x(j);
  if (v > 1) {
    throw std::invalid_argument("Cohen-pair target must be binary; x(" + std::to_string(j) +
                                ") = " + std::to_string(v));
  }
  return static_cast<std::uint8_t>(v);
}

bit_string meet_roster(const cohen_roster& roster, std::uint64_t stage, const bit_string& current,
                       const char* which) {
  if (roster.empty()) return current;
  const auto& dense = *roster[stage % roster.size()];
  bit_string next = dense.extend(current);
  const bool extends = next.size() >= current.size() &&
                       std::equal(current.begin(), current.end(), next.begin());
  if (!extends || !dense.member(next)) {
    throw contract_violation(std::string(which) + " oracle broke its contract at stage " +
                             std::to_string(stage));
  }
  return next;
}

}  // namespace

std::shared_ptr<const cohen_dense> make_cohen_dense(const cohen_spec& spec) {
  return std::visit(
      overloaded{
          [](const contains_word& s) -> std::shared_ptr<const cohen_dense> {
            return std::make_shared<contains_set>(s.w);
          },
          [](const min_length& s) -> std::shared_ptr<const cohen_dense> {
            return std::make_shared<min_length_set>(s.n);
          },
          [](const ends_with_word& s) -> std::shared_ptr<const cohen_dense> {
            return std::make_shared<ends_with_set>(s.w);
          },
      },
      spec);
}

cohen_roster make_cohen_roster(const std::vector<cohen_spec>& specs) {
  cohen_roster out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(make_cohen_dense(s));
  return out;
}

pair_transcript build_pair(const cohen_roster& roster1, const cohen_roster& roster2,
                           const eventually_periodic& x, std::uint64_t stages) {
  pair_transcript out;
  bit_string p;
  bit_string q;
  std::size_t j = 0;
  for (std::uint64_t stage = 0; stage < stages; ++stage) {
    bit_string extended = meet_roster(roster1, stage, p, "roster1");
    for (std::size_t m = p.size(); m < extended.size(); ++m) {
      q.push_back(extended[m] == 1 ? target_bit(x, j++) : std::uint8_t{0});
    }
    p = std::move(extended);
    pair_stage snapshot{stage, p, {}};

    extended = meet_roster(roster2, stage, q, "roster2");
    p.resize(p.size() + (extended.size() - q.size()), 0);
    q = std::move(extended);
    snapshot.q = q;

    p.push_back(1);
    q.push_back(target_bit(x, j++));
    out.stages.push_back(std::move(snapshot));
  }
  out.c1 = std::move(p);
  out.c2 = std::move(q);
  return out;
}

bit_string decode_pair(const bit_string& c1, const bit_string& c2, std::size_t count) {
  bit_string out;
  out.reserve(count);
  for (std::size_t m = 0; m < c1.size() && out.size() < count; ++m) {
    if (c1[m] != 1) continue;
    if (m >= c2.size()) {
      throw std::invalid_argument("one-position " + std::to_string(m) + " lies outside c2");
    }
    out.push_back(c2[m]);
  }
  if (out.size() < count) {
    throw std::invalid_argument("c1 has only " + std::to_string(out.size()) + " ones, needed " +
                                std::to_string(count));
  }
  return out;
}

std::string render_pair_transcript(const pair_transcript& t) {
  std::string out;
  for (const auto& s : t.stages) {
    out += "STAGE " + std::to_string(s.index) + " P " + render_bits(s.p) + " Q " +
           render_bits(s.q) + "\n";
  }
  out += "C1 " + render_bits(t.c1) + "\n";
  out += "C2 " + render_bits(t.c2) + "\n";
  return out;
}

pair_transcript parse_pair_transcript(std::string_view text) {
  pair_transcript out;
  bool have_c1 = false;
  bool have_c2 = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty()) continue;

    std::vector<std::string_view> tokens;
    while (!line.empty()) {
      auto space = line.find(' ');
      tokens.push_back(line.substr(0, space));
      line = space == std::string_view::npos ? std::string_view{} : line.substr(space + 1);
    }
    auto fail = [&](const std::string& message) {
      return malformed_input("pair transcript line " + std::to_string(line_no) + ": " + message);
    };
    try {
      if (tokens[0] == "STAGE") {
        if (have_c1 || tokens.size() != 6 || tokens[2] != "P" || tokens[4] != "Q") {
          throw fail("expected STAGE <i> P <bits> Q <bits>");
        }
        pair_stage s;
        s.index = static_cast<std::uint64_t>(parse_natural(tokens[1]));
        s.p = parse_bits(tokens[3]);
        s.q = parse_bits(tokens[5]);
        out.stages.push_back(std::move(s));
      } else if (tokens[0] == "C1" && tokens.size() == 2 && !have_c1) {
        out.c1 = parse_bits(tokens[1]);
        have_c1 = true;
      } else if (tokens[0] == "C2" && tokens.size() == 2 && have_c1 && !have_c2) {
        out.c2 = parse_bits(tokens[1]);
        have_c2 = true;
      } else {
        throw fail("unexpected record");
      }
    } catch (const malformed_input& e) {
      if (std::string_view(e.what()).starts_with("pair transcript")) throw;
      throw fail(e.what());
    }
  }
  if (!have_c1 || !have_c2) throw malformed_input("pair transcript: missing C1/C2 footer");
  return out;
}

verification_report verify_pair(const cohen_roster& roster1, const cohen_roster& roster2,
                                const eventually_periodic& x, const pair_transcript& t) {
  verification_report report;
  auto is_prefix_of = [](const bit_string& a, const bit_string& b) {
    return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
  };

  bool stages_ok = true;
  std::vector<bool> met1(roster1.size(), false);
  std::vector<bool> met2(roster2.size(), false);
  for (std::size_t i = 0; i < t.stages.size(); ++i) {
    const auto& s = t.stages[i];
    const std::string locus = "stage " + std::to_string(i);
    if (s.index != i) {
      report.fail("stage-order", locus, "stage index " + std::to_string(s.index));
      stages_ok = false;
    }
    if (!is_prefix_of(s.p, t.c1) || !is_prefix_of(s.q, t.c2)) {
      report.fail("snapshot-prefix", locus, "snapshot is not a prefix of the final strings");
      stages_ok = false;
    }
    if (!roster1.empty()) {
      if (roster1[i % roster1.size()]->member(s.p)) {
        met1[i % roster1.size()] = true;
      } else {
        report.fail("roster1-member", locus, "P snapshot misses its dense set");
        stages_ok = false;
      }
    }
    if (!roster2.empty()) {
      if (roster2[i % roster2.size()]->member(s.q)) {
        met2[i % roster2.size()] = true;
      } else {
        report.fail("roster2-member", locus, "Q snapshot misses its dense set");
        stages_ok = false;
      }
    }
  }
  if (stages_ok) report.pass("stages");

  bool covered = true;
  for (std::size_t i = 0; i < std::min(met1.size(), t.stages.size()); ++i) {
    if (!met1[i]) {
      report.fail("coverage", "roster1 " + std::to_string(i), "never met");
      covered = false;
    }
  }
  for (std::size_t i = 0; i < std::min(met2.size(), t.stages.size()); ++i) {
    if (!met2[i]) {
      report.fail("coverage", "roster2 " + std::to_string(i), "never met");
      covered = false;
    }
  }
  if (covered) report.pass("coverage");

  if (t.c1.size() != t.c2.size()) {
    report.fail("lengths", "C1/C2",
                std::to_string(t.c1.size()) + " vs " + std::to_string(t.c2.size()));
  } else {
    report.pass("lengths");
  }

  // Every 1 in c1 must sit over the next coded bit in c2.
  std::size_t ones = 0;
  bool invariant_ok = true;
  for (std::size_t m = 0; m < t.c1.size(); ++m) {
    if (t.c1[m] != 1) continue;
    const auto want = x(ones);
    if (m >= t.c2.size() || t.c2[m] != want) {
      if (invariant_ok) {
        report.fail("coded-ones", "position " + std::to_string(m),
                    "c2 does not carry x(" + std::to_string(ones) + ") = " +
                        std::to_string(want));
      }
      invariant_ok = false;
    }
    ++ones;
  }
  if (invariant_ok) report.pass("coded-ones");

  if (ones < t.stages.size()) {
    report.fail("markers", "C1",
                std::to_string(ones) + " ones for " + std::to_string(t.stages.size()) + " stages");
  } else {
    report.pass("markers");
  }

  try {
    const auto decoded = decode_pair(t.c1, t.c2, ones);
    bool matches = true;
    for (std::size_t j = 0; j < decoded.size(); ++j) matches &= (decoded[j] == x(j));
    if (matches) {
      report.pass("decode");
    } else {
      report.fail("decode", "C2", "decoded bits differ from the target prefix");
    }
  } catch (const std::exception& e) {
    report.fail("decode", "C1/C2", e.what());
  }
  return report;
}

}  // namespace genco
