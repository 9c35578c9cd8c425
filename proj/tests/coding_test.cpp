#include "genco/coding.hpp"
#include "genco/errors.hpp"
#include "genco/help_set.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <limits>
#include <random>

namespace genco {
namespace {

// Oracles kept deliberately naive.

std::uint64_t theta_oracle(std::uint64_t n) {
  std::uint64_t v = n + 1;
  std::uint64_t m = 0;
  while (v % 2 == 0) {
    v /= 2;
    ++m;
  }
  return m;
}

bool is_prime_oracle(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; out.size() < count; ++n) {
    if (is_prime_oracle(n)) out.push_back(n);
  }
  return out;
}

natural code_oracle(const std::vector<std::uint64_t>& s) {
  const auto p = first_primes(s.size());
  natural out = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::uint64_t e = 0; e <= s[i]; ++e) out *= p[i];
  }
  return out;
}

eventually_periodic random_real(std::mt19937_64& rng, std::uint64_t max_value) {
  eventually_periodic s;
  s.prefix.resize(testing::uniform(rng, 0, 4));
  s.cycle.resize(testing::uniform(rng, 1, 4));
  for (auto& v : s.prefix) v = testing::uniform(rng, 0, max_value);
  for (auto& v : s.cycle) v = testing::uniform(rng, 0, max_value);
  return s;
}

element_stream stream_of(std::function<natural(std::uint64_t)> at) {
  auto index = std::make_shared<std::uint64_t>(0);
  return [at, index]() -> std::optional<natural> { return at((*index)++); };
}

TEST(Theta, Examples) {
  EXPECT_EQ(theta(0), 0u);
  EXPECT_EQ(theta(3), 2u);
  EXPECT_EQ(theta(11), theta_oracle(11));
  EXPECT_EQ(theta(11), 2u);
}

TEST(Theta, FiberExamples) {
  auto fiber_oracle = [](std::uint64_t m, std::uint64_t k) {
    for (std::uint64_t n = 0;; ++n) {
      if (theta_oracle(n) == m && k-- == 0) return n;
    }
  };
  EXPECT_EQ(theta_fiber(0, 0), 0u);
  EXPECT_EQ(theta_fiber(1, 0), fiber_oracle(1, 0));
  EXPECT_EQ(theta_fiber(1, 1), fiber_oracle(1, 1));
  EXPECT_EQ(theta_fiber(1, 1), 5u);
  EXPECT_EQ(theta_fiber(2, 1), fiber_oracle(2, 1));
  EXPECT_EQ(theta_fiber(2, 1), 11u);
  for (std::uint64_t m = 0; m < 6; ++m) {
    for (std::uint64_t k = 0; k < 20; ++k) ASSERT_EQ(theta_fiber(m, k), fiber_oracle(m, k));
  }
}

TEST(Theta, FiberInvertsAndIncreases) {
  for (std::uint64_t m = 0; m <= 56; ++m) {
    for (std::uint64_t k = 0; k <= 64; ++k) {
      ASSERT_EQ(theta(theta_fiber(m, k)), m);
      if (k > 0) ASSERT_GT(theta_fiber(m, k), theta_fiber(m, k - 1));
    }
  }
  // (2k+1)·2^m − 1 stops fitting 64 bits; the library refuses instead of wrapping.
  EXPECT_THROW(theta_fiber(64, 0), std::overflow_error);
  EXPECT_THROW(theta_fiber(63, 1), std::overflow_error);
}

TEST(Eta, Examples) {
  EXPECT_EQ(eta(help_set::evens(), 0), 0u);
  EXPECT_EQ(eta(help_set::evens(), 2), 1u);
  const auto p = first_primes(4);
  ASSERT_EQ(p[3], 7u);
  EXPECT_EQ(eta(help_set::primes(), 7), theta_oracle(3));
  EXPECT_THROW(eta(help_set::evens(), 3), std::invalid_argument);
}

TEST(EtaFiber, Examples) {
  EXPECT_EQ(eta_fiber_element(help_set::evens(), 1, 0), 2);
  EXPECT_EQ(eta_fiber_element(help_set::evens(), 1, 1), 10);
  EXPECT_EQ(eta_fiber_element(help_set::evens(), 0, 0), 0);
  EXPECT_EQ(eta_fiber_element(help_set::primes(), 0, 1), 5);
}

std::vector<help_set> builtin_help_sets() {
  return {help_set::evens(), help_set::primes(),
          help_set::selfcode({{2, 0, 1}, {1}}), help_set::selfcode({{}, {0}}),
          help_set::explicit_pattern({{1, 1, 0}, {0, 1, 1}})};
}

TEST(HelpSet, EnumerationIsIncreasingAndMember) {
  for (const auto& a : builtin_help_sets()) {
    const std::uint64_t limit = a.which() == help_set::kind::selfcode ? 40 : 10000;
    natural previous = -1;
    for (std::uint64_t n = 0; n <= limit; ++n) {
      const natural z = a.enumerate(n);
      ASSERT_GT(z, previous) << to_string(a.which()) << " n=" << n;
      ASSERT_TRUE(a.member(z));
      ASSERT_EQ(a.index_of(z), n);
      previous = z;
    }
  }
}

TEST(HelpSet, EnumerationMatchesMembershipScan) {
  for (const auto& a : builtin_help_sets()) {
    if (a.which() == help_set::kind::selfcode) continue;
    std::uint64_t n = 0;
    for (std::uint64_t z = 0; z < 2000; ++z) {
      if (a.member(z)) ASSERT_EQ(a.enumerate(n++), z);
    }
  }
  // Primes against trial division.
  const auto primes = first_primes(1000);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    ASSERT_EQ(help_set::primes().enumerate(i), primes[i]);
  }
}

// Full range m, k <= 32 where e_A has a closed form. Primes and self-codes are only reachable for
// small fiber indices: (2k+1)·2^m − 1 reaches 2.8e11, whose prime or prefix code cannot be produced.
TEST(HelpSet, EtaInvertsFiberElements) {
  for (const auto& a : builtin_help_sets()) {
    std::uint64_t index_cap = std::numeric_limits<std::uint64_t>::max();
    if (a.which() == help_set::kind::primes) index_cap = 1000000;
    if (a.which() == help_set::kind::selfcode) index_cap = 40;
    std::size_t checked = 0;
    for (std::uint64_t m = 0; m <= 32; ++m) {
      for (std::uint64_t k = 0; k <= 32; ++k) {
        if (theta_fiber(m, k) > index_cap) continue;
        ASSERT_EQ(eta(a, eta_fiber_element(a, m, k)), m) << m << "," << k;
        ++checked;
      }
    }
    EXPECT_GE(checked, 20u) << to_string(a.which());
  }
}

TEST(HelpSet, UnreachablePrimeIndexFailsFast) {
  EXPECT_THROW(help_set::primes().enumerate(theta_fiber(32, 32)), std::out_of_range);
  EXPECT_TRUE(help_set::primes().member(natural("18446744073709551557")));
  EXPECT_FALSE(help_set::primes().member(natural("18446744073709551559")));
}

TEST(HelpSet, ExplicitPatternMustBeInfiniteAndCoinfinite) {
  EXPECT_THROW(help_set::explicit_pattern({{1}, {0}}), std::invalid_argument);
  EXPECT_THROW(help_set::explicit_pattern({{0}, {1}}), std::invalid_argument);
  EXPECT_THROW(help_set::explicit_pattern({{}, {0, 2}}), std::invalid_argument);
  const auto a = help_set::explicit_pattern({{0, 1}, {1, 0, 0}});
  std::size_t gaps = 0;
  for (natural z = 0; gaps < 1000; ++z) gaps += !a.member(z);
  EXPECT_EQ(gaps, 1000u);
}

TEST(SelfCode, Examples) {
  const eventually_periodic abar{{2, 0, 1}, {1}};
  EXPECT_EQ(selfcode_element(abar, 0), 8);
  EXPECT_EQ(selfcode_element(abar, 1), 24);
  EXPECT_EQ(selfcode_element(abar, 2), 600);
  const eventually_periodic zeros{{}, {0}};
  EXPECT_EQ(selfcode_element(zeros, 0), 2);
  EXPECT_EQ(selfcode_element(zeros, 1), 6);
  EXPECT_EQ(selfcode_element(zeros, 2), 30);
  for (std::uint64_t n = 0; n < 10; ++n) {
    ASSERT_EQ(selfcode_element(abar, n), code_oracle(abar.take(n + 1)));
  }
}

TEST(SelfCode, Membership) {
  const auto a = help_set::selfcode({{2, 0, 1}, {1}});
  EXPECT_TRUE(a.member(24));
  EXPECT_FALSE(a.member(12));
  EXPECT_FALSE(a.member(1));
  EXPECT_FALSE(a.member(16));
}

TEST(SelfCode, PrefixCodeRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> s(testing::uniform(rng, 0, 12));
    for (auto& v : s) v = testing::uniform(rng, 0, 9);
    const auto z = prefix_code(s);
    ASSERT_EQ(z, code_oracle(s));
    ASSERT_EQ(decode_prefix_code(z), s);
  }
  EXPECT_FALSE(decode_prefix_code(9).has_value());
  EXPECT_FALSE(decode_prefix_code(0).has_value());
  EXPECT_EQ(decode_prefix_code(12), (std::vector<std::uint64_t>{1, 0}));
}

TEST(Recover, Examples) {
  const eventually_periodic abar{{2, 0, 1}, {1}};
  auto odd_length = stream_of([&](std::uint64_t i) { return selfcode_element(abar, 2 * i); });
  EXPECT_EQ(recover_from_subset(odd_length, 2, 100), (std::vector<std::uint64_t>{2, 0}));
  auto all = stream_of([&](std::uint64_t i) { return selfcode_element(abar, i); });
  EXPECT_EQ(recover_from_subset(all, 1, 100), (std::vector<std::uint64_t>{2}));
}

TEST(Recover, MalformedElementNamesValue) {
  std::vector<natural> values{8, 9, 600};
  auto index = std::make_shared<std::size_t>(0);
  element_stream next = [&values, index]() -> std::optional<natural> {
    return values.at((*index)++);
  };
  try {
    recover_from_subset(next, 3, 100);
    FAIL() << "expected malformed_input";
  } catch (const malformed_input& e) {
    EXPECT_NE(std::string(e.what()).find("9"), std::string::npos);
  }
}

TEST(Recover, StallingStreamExhaustsFuel) {
  element_stream stalled = []() -> std::optional<natural> { return std::nullopt; };
  EXPECT_THROW(recover_from_subset(stalled, 1, 100), fuel_exhausted);
  element_stream repeating = []() -> std::optional<natural> { return natural(8); };
  EXPECT_THROW(recover_from_subset(repeating, 3, 100), fuel_exhausted);
}

TEST(Recover, RandomRealsFromSparseSubsets) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const auto abar = random_real(rng, 6);
    const auto expected = abar.take(32);
    for (std::uint64_t j = 2; j <= 5; ++j) {
      auto every_jth = stream_of([&, j](std::uint64_t i) { return selfcode_element(abar, j * i); });
      ASSERT_EQ(recover_from_subset(every_jth, 32, 1000), expected);
    }
    auto keep = std::make_shared<std::mt19937_64>(trial);
    auto position = std::make_shared<std::uint64_t>(0);
    element_stream random_subset = [&, keep, position]() -> std::optional<natural> {
      while (std::bernoulli_distribution(0.2)(*keep) == false) ++*position;
      return selfcode_element(abar, (*position)++);
    };
    ASSERT_EQ(recover_from_subset(random_subset, 32, 1000), expected);
  }
}

TEST(Decode, Examples) {
  const auto evens = help_set::evens();
  EXPECT_EQ(decode(evens, testing::naturals({5, 2, 7, 6})), (std::vector<std::uint64_t>{1, 2}));
  EXPECT_TRUE(decode(evens, testing::naturals({1, 3, 5})).empty());
  EXPECT_EQ(decode(evens, testing::naturals({0})), (std::vector<std::uint64_t>{0}));
}

TEST(Decode, RoundTripThroughInterleavedFiberChoices) {
  std::mt19937_64 rng(45);
  for (const auto& a : builtin_help_sets()) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::uint64_t> x(testing::uniform(rng, 0, 12));
      const std::uint64_t label_cap = a.which() == help_set::kind::selfcode ? 2 : 6;
      for (auto& v : x) v = testing::uniform(rng, 0, label_cap);
      node g;
      for (auto v : x) {
        for (auto gap = testing::uniform(rng, 0, 2); gap > 0; --gap) {
          natural z = testing::uniform(rng, 0, 500);
          while (a.member(z)) ++z;
          g.push_back(z);
        }
        g.push_back(eta_fiber_element(a, v, testing::uniform(rng, 0, 2)));
      }
      ASSERT_EQ(decode(a, g), x);
    }
  }
}

// Enumerations of the infinite sets B, each paired with the help sets it sticks out of.
struct infinite_set {
  std::string name;
  std::function<natural(std::uint64_t)> at;
};

TEST(Differences, BMinusAHasManyElements) {
  const std::vector<infinite_set> sets{
      {"evens", [](std::uint64_t i) { return natural(2 * i); }},
      {"odds", [](std::uint64_t i) { return natural(2 * i + 1); }},
      {"primes", [](std::uint64_t i) { return help_set::primes().enumerate(i); }},
      {"omega", [](std::uint64_t i) { return natural(i); }},
  };
  const std::vector<std::pair<std::string, help_set>> helps{
      {"evens", help_set::evens()},
      {"primes", help_set::primes()},
      {"selfcode", help_set::selfcode({{2, 0, 1}, {1}})},
  };
  for (const auto& b : sets) {
    for (const auto& [a_name, a] : helps) {
      if (b.name == a_name) continue;  // B ⊆ A
      std::size_t found = 0;
      std::uint64_t i = 0;
      for (; i < 100000 && found < 100; ++i) found += !a.member(b.at(i));
      EXPECT_EQ(found, 100u) << b.name << " minus " << a_name;
    }
  }
}

}  // namespace
}  // namespace genco
