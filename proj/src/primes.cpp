#include "genco/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace genco::primes {

namespace {

// 2^28 holds about 1.46e7 primes, far more than any coding run reaches.
constexpr std::uint64_t kSieveCeiling = std::uint64_t{1} << 28;

// Above this, single membership queries go to Miller-Rabin rather than growing the sieve.
constexpr std::uint64_t kSieveForMembership = std::uint64_t{1} << 22;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
  }
  return result;
}

// Deterministic for all 64-bit inputs with these witnesses.
bool miller_rabin(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  for (; d % 2 == 0; d /= 2) ++s;
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mul_mod(x, x, n);
      composite = x != n - 1;
    }
    if (composite) return false;
  }
  return true;
}

// p_n < n(ln n + ln ln n) for n >= 6 (Rosser), with n counted from 1.
std::uint64_t nth_upper_bound(std::uint64_t n) {
  const double m = static_cast<double>(n + 1);
  if (m < 6) return 16;
  return static_cast<std::uint64_t>(m * (std::log(m) + std::log(std::log(m)))) + 16;
}

class prime_table {
 public:
  prime_table() { grow(1 << 16); }

  std::uint64_t nth(std::uint64_t n) {
    std::lock_guard lock(mutex_);
    if (primes_.size() <= n) grow(std::max(nth_upper_bound(n), limit_ * 2));
    return primes_[n];
  }

  std::uint64_t count_below(std::uint64_t z) {
    std::lock_guard lock(mutex_);
    if (z > limit_) grow(std::max(z, limit_ * 2));
    return static_cast<std::uint64_t>(std::lower_bound(primes_.begin(), primes_.end(), z) -
                                      primes_.begin());
  }

  bool is_prime(std::uint64_t z) {
    std::lock_guard lock(mutex_);
    if (z >= limit_) {
      if (z >= kSieveForMembership) return miller_rabin(z);
      grow(std::max(z + 1, limit_ * 2));
    }
    return std::binary_search(primes_.begin(), primes_.end(), z);
  }

 private:
  // Sieve [0, new_limit).
  void grow(std::uint64_t new_limit) {
    if (new_limit > kSieveCeiling) {
      throw std::out_of_range("prime table limit exceeded (needs primes up to " +
                              std::to_string(new_limit) + ")");
    }
    std::vector<bool> composite(new_limit, false);
    primes_.clear();
    for (std::uint64_t i = 2; i < new_limit; ++i) {
      if (composite[i]) continue;
      primes_.push_back(i);
      for (std::uint64_t j = i * i; j < new_limit; j += i) composite[j] = true;
    }
    limit_ = new_limit;
  }

  std::mutex mutex_;
  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> primes_;
};

prime_table& table() {
  static prime_table instance;
  return instance;
}

}  // namespace

std::uint64_t nth(std::uint64_t n) { return table().nth(n); }
bool is_prime(std::uint64_t z) { return table().is_prime(z); }
std::uint64_t count_below(std::uint64_t z) { return table().count_below(z); }

}  // namespace genco::primes
