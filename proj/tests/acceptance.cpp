// Acceptance suite: one line per criterion, `PASS`/`FAIL`, with the measured time against the
// stated limit. Exit status is nonzero when any criterion fails.

#include "genco/cli.hpp"
#include "genco/coding.hpp"
#include "genco/cohen.hpp"
#include "genco/config.hpp"
#include "genco/dense.hpp"
#include "genco/errors.hpp"
#include "genco/generic.hpp"
#include "random_runs.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace genco;
namespace fs = std::filesystem;

const fs::path kData = GENCO_TEST_DATA;

// A criterion body returns an empty string on success, otherwise the first problem found.
struct criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<std::string()> body;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / ("genco_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o;
  std::ostringstream e;
  const int code = cli::run(args, o, e);
  if (out != nullptr) *out = o.str();
  return code;
}

std::string describe_run(const std::vector<dense_spec>& roster, const help_set& a,
                         const eventually_periodic& x) {
  return "roster " + canonical(roster_json(roster)) + " help " + canonical(to_json(a)) +
         " target " + canonical(to_json(x));
}

// 1. Coded generics recover their target and meet every roster entry.
std::string coded_generic_decodes() {
  std::mt19937_64 rng(1001);
  for (int run = 0; run < 100; ++run) {
    const auto roster = testing::random_roster(rng, 8);
    const auto a = testing::random_help(rng);
    const auto x = testing::random_target(rng, a);
    const auto t = build_coded_generic(roster, a, x, 64);
    const auto decoded = decode(a, t.g);
    if (decoded.size() < 64 || !std::equal(decoded.begin(), decoded.begin() + 64, x.take(64).begin())) {
      return "run " + std::to_string(run) + ": decode mismatch for " + describe_run(roster, a, x);
    }
    std::vector<bool> met(roster.size(), false);
    for (const auto& entry : t.entries) {
      if (const auto* m = std::get_if<meet_entry>(&entry)) {
        if (make_dense_set(roster[m->roster_index])->member(m->condition) == membership::yes) {
          met[m->roster_index] = true;
        }
      }
    }
    for (std::size_t i = 0; i < met.size(); ++i) {
      if (!met[i]) {
        return "run " + std::to_string(run) + ": roster entry " + std::to_string(i) +
               " never met for " + describe_run(roster, a, x);
      }
    }
  }
  return {};
}

// 2. Extension into a dense set while avoiding A, on random (T, D, A).
std::string extension_avoiding_a() {
  std::mt19937_64 rng(1002);
  const std::vector<help_set> helps{help_set::evens(), help_set::primes(),
                                    help_set::explicit_pattern({{}, {1, 1, 0, 0}})};
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = testing::random_condition(rng);
    const auto spec = testing::random_dense_spec(rng);
    const auto a = trial % 4 == 3 ? help_set::selfcode(testing::random_sequence(rng, 5))
                                  : helps[trial % 3];
    const auto d = make_dense_set(spec);
    const std::string where = "trial " + std::to_string(trial) + " (" + describe(spec) + ", " +
                              to_string(a.which()) + ", " + render(t) + ")";
    try {
      const auto r = extend_in_a(t, *d, a, kDefaultFuel);
      if (extends_a(r, t, a).answer != verdict::yes) return where + ": result not below T in ≤_A";
      if (d->member(r) != membership::yes) return where + ": result not in the dense set";
    } catch (const fuel_exhausted& e) {
      return where + ": fuel exhausted: " + e.what();
    }
  }
  return {};
}

// 3. Truncated rank of stem_length(n) equals max(0, n - |t|).
std::string rank_exactness() {
  std::mt19937_64 rng(1003);
  for (std::uint64_t n = 0; n <= 8; ++n) {
    const auto d = make_dense_set(stem_length{n});
    const auto& stems = dynamic_cast<const stem_dense_set&>(*d);
    for (std::size_t len = 0; len <= 8; ++len) {
      for (int sample = 0; sample < 4; ++sample) {
        node t(len);
        for (auto& e : t) e = testing::uniform(rng, 0, 100);
        const auto r = rank_bounded(stems, t, 16, 64);
        const std::uint64_t expected = n > len ? n - len : 0;
        if (r != expected) {
          return "n=" + std::to_string(n) + " t=" + render_sequence(t) + ": got " +
                 (r ? std::to_string(*r) : std::string("none"));
        }
      }
    }
  }
  return {};
}

// 4. A self-coding set is recovered from sparse subsets of itself.
std::string selfcode_recovery() {
  std::mt19937_64 rng(1004);
  for (int trial = 0; trial < 50; ++trial) {
    const auto abar = testing::random_sequence(rng, 6);
    const auto expected = abar.take(32);
    std::vector<element_stream> streams;
    for (std::uint64_t j = 2; j <= 5; ++j) {
      const std::uint64_t offset = testing::uniform(rng, 0, j - 1);
      auto i = std::make_shared<std::uint64_t>(0);
      streams.push_back([abar, j, offset, i]() -> std::optional<natural> {
        return selfcode_element(abar, offset + j * (*i)++);
      });
    }
    const double keep = 0.2 + 0.8 * std::uniform_real_distribution<double>(0, 1)(rng);
    auto coin = std::make_shared<std::mt19937_64>(rng());
    auto position = std::make_shared<std::uint64_t>(0);
    streams.push_back([abar, keep, coin, position]() -> std::optional<natural> {
      while (!std::bernoulli_distribution(keep)(*coin)) ++*position;
      return selfcode_element(abar, (*position)++);
    });
    for (std::size_t s = 0; s < streams.size(); ++s) {
      if (recover_from_subset(streams[s], 32, 10000) != expected) {
        return "trial " + std::to_string(trial) + " stream " + std::to_string(s) +
               ": wrong prefix for " + canonical(to_json(abar));
      }
    }
  }
  return {};
}

// 5. B \ A is found to be large for every built-in pair with B not contained in A.
std::string difference_sets() {
  struct named_set {
    std::string name;
    std::function<natural(std::uint64_t)> at;
  };
  const std::vector<named_set> bs{
      {"evens", [](std::uint64_t i) { return natural(2 * i); }},
      {"odds", [](std::uint64_t i) { return natural(2 * i + 1); }},
      {"primes", [](std::uint64_t i) { return help_set::primes().enumerate(i); }},
      {"omega", [](std::uint64_t i) { return natural(i); }},
  };
  // The explicit set {n : n mod 4 in {0,1}} misses 2 mod 4, 3 mod 4, and the primes 3 mod 4.
  const std::vector<std::pair<std::string, help_set>> as{
      {"evens", help_set::evens()},
      {"primes", help_set::primes()},
      {"selfcode", help_set::selfcode({{2, 0, 1}, {1}})},
      {"explicit", help_set::explicit_pattern({{}, {1, 1, 0, 0}})},
  };
  for (const auto& b : bs) {
    for (const auto& [a_name, a] : as) {
      if (b.name == a_name) continue;
      std::size_t found = 0;
      for (std::uint64_t i = 0; i < 100000 && found < 100; ++i) found += !a.member(b.at(i));
      if (found < 100) {
        return b.name + " minus " + a_name + ": only " + std::to_string(found) + " elements";
      }
    }
  }
  return {};
}

// 6. Cohen pairs decode their target and meet both rosters.
std::string cohen_pair_decodes() {
  std::mt19937_64 rng(1006);
  for (int run = 0; run < 100; ++run) {
    auto specs1 = testing::random_cohen_roster(rng, 8);
    auto specs2 = testing::random_cohen_roster(rng, 8);
    if (run % 4 == 0) specs2.push_back(ends_with_word{{0, 1}});
    const auto r1 = make_cohen_roster(specs1);
    const auto r2 = make_cohen_roster(specs2);
    const auto x = testing::random_sequence(rng, 1);
    const auto t = build_pair(r1, r2, x, 64);
    const auto decoded = decode_pair(t.c1, t.c2, 64);
    for (std::size_t j = 0; j < 64; ++j) {
      if (decoded[j] != x(j)) return "run " + std::to_string(run) + ": bit " + std::to_string(j);
    }
    std::vector<bool> met1(r1.size()), met2(r2.size());
    for (std::size_t i = 0; i < t.stages.size(); ++i) {
      if (!r1.empty() && r1[i % r1.size()]->member(t.stages[i].p)) met1[i % r1.size()] = true;
      if (!r2.empty() && r2[i % r2.size()]->member(t.stages[i].q)) met2[i % r2.size()] = true;
    }
    if (std::find(met1.begin(), met1.end(), false) != met1.end() ||
        std::find(met2.begin(), met2.end(), false) != met2.end()) {
      return "run " + std::to_string(run) + ": a roster entry was never met";
    }
  }
  return {};
}

// 7. `verify` exits 1 for every single-field mutation class.
std::string verifier_mutations() {
  std::mt19937_64 rng(1007);
  const auto dir = scratch_dir();
  for (int run = 0; run < 50; ++run) {
    run_config config;
    config.help = testing::random_help(rng);
    config.dense = testing::random_roster(rng, 8);
    config.target = testing::random_target(rng, *config.help);
    config.steps = testing::uniform(rng, 2, 24);
    const auto config_path = dir / ("run" + std::to_string(run) + ".json");
    std::ofstream(config_path) << canonical_config(config);
    const auto t = build_coded_generic(config.dense, *config.help, config.target, config.steps);

    const auto transcript_path = dir / ("run" + std::to_string(run) + ".transcript");
    std::ofstream(transcript_path, std::ios::trunc) << render_transcript(t);
    if (run_cli({"verify", "--config", config_path.string(), "--transcript",
                 transcript_path.string()}) != 0) {
      return "run " + std::to_string(run) + ": untampered transcript rejected";
    }
    for (auto m : testing::all_mutations()) {
      std::ofstream(transcript_path, std::ios::trunc)
          << render_transcript(testing::mutate(t, m, *config.help, rng));
      const int code = run_cli(
          {"verify", "--config", config_path.string(), "--transcript", transcript_path.string()});
      if (code != 1) {
        return "run " + std::to_string(run) + ": " + testing::to_string(m) + " gave exit " +
               std::to_string(code);
      }
    }
  }
  fs::remove_all(dir);
  return {};
}

// 8. Builds are byte-identical to the checked-in golden transcripts.
std::string golden_determinism() {
  std::vector<fs::path> configs;
  for (const auto& e : fs::directory_iterator(kData / "corpus")) configs.push_back(e.path());
  if (configs.size() < 20) return "only " + std::to_string(configs.size()) + " corpus configs";
  for (const auto& config : configs) {
    const bool cohen = slurp(config).find("\"cohen\"") != std::string::npos;
    const auto golden = slurp(kData / "golden" / (config.stem().string() + ".transcript"));
    for (int repeat = 0; repeat < 2; ++repeat) {
      std::string out;
      if (run_cli({cohen ? "cohen" : "build", "--config", config.string(), "--out", "-"}, &out) != 0) {
        return config.filename().string() + ": build failed";
      }
      if (out != golden) return config.filename().string() + ": differs from golden transcript";
    }
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<criterion> criteria{
      {1, "coded generic decodes x|64 and meets its roster (100 runs)", 10.0, coded_generic_decodes},
      {2, "extension into D avoiding A (200 triples)", 5.0, extension_avoiding_a},
      {3, "stem_length rank exactness (n, |t| <= 8)", 1.0, rank_exactness},
      {4, "self-coding recovery of abar|32 (50 reals)", 2.0, selfcode_recovery},
      {5, "B minus A yields 100 elements under fuel 1e5", 1.0, difference_sets},
      {6, "Cohen pair decodes 64 bits and meets both rosters (100 runs)", 5.0, cohen_pair_decodes},
      {7, "verifier catches 5 mutation classes (50 transcripts)", 5.0, verifier_mutations},
      {8, "golden transcripts are reproduced byte for byte", 2.0, golden_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.body();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && seconds >= c.limit_seconds) {
      problem = "took " + std::to_string(seconds) + " s";
    }
    std::printf("%s [%d] %s (%.3f s, limit %.0f s)%s%s\n", problem.empty() ? "PASS" : "FAIL",
                c.number, c.name.c_str(), seconds, c.limit_seconds, problem.empty() ? "" : ": ",
                problem.c_str());
    failures += !problem.empty();
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
