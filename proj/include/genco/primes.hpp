#pragma once

#include <cstdint>

namespace genco::primes {

// Process-wide sieve that grows on demand; safe for concurrent callers.

/// The n-th prime, 0-indexed (nth(0) == 2).
std::uint64_t nth(std::uint64_t n);

bool is_prime(std::uint64_t z);

/// Number of primes strictly below z.
std::uint64_t count_below(std::uint64_t z);

}  // namespace genco::primes
