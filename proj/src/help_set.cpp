#include "genco/help_set.hpp"

#include "genco/primes.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace genco {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

bool fits_u64(const natural& z) { return z >= 0 && z <= kU64Max; }

// Members of a characteristic pattern: counts per prefix and per cycle.
struct pattern_counts {
  std::uint64_t in_prefix = 0;
  std::uint64_t in_cycle = 0;
};

pattern_counts count_pattern(const eventually_periodic& p) {
  pattern_counts c;
  for (auto v : p.prefix) c.in_prefix += (v != 0);
  for (auto v : p.cycle) c.in_cycle += (v != 0);
  return c;
}

}  // namespace

natural prefix_code(const std::vector<std::uint64_t>& s) {
  natural code = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    natural p = primes::nth(i);
    code *= boost::multiprecision::pow(p, static_cast<unsigned>(s[i] + 1));
  }
  return code;
}

std::optional<std::vector<std::uint64_t>> decode_prefix_code(const natural& z) {
  if (z < 1) return std::nullopt;
  std::vector<std::uint64_t> out;
  natural rest = z;
  for (std::uint64_t i = 0; rest != 1; ++i) {
    const natural p = primes::nth(i);
    std::uint64_t exponent = 0;
    while (rest % p == 0) {
      rest /= p;
      ++exponent;
    }
    if (exponent == 0) return std::nullopt;
    out.push_back(exponent - 1);
  }
  return out;
}

help_set help_set::evens() { return help_set(kind::evens, {}); }
help_set help_set::primes() { return help_set(kind::primes, {}); }
help_set help_set::selfcode(eventually_periodic abar) {
  if (abar.cycle.empty()) throw std::invalid_argument("self-code real needs a nonempty cycle");
  return help_set(kind::selfcode, std::move(abar));
}
help_set help_set::explicit_pattern(eventually_periodic pattern) {
  bool has_member = false;
  bool has_gap = false;
  for (auto v : pattern.prefix) {
    if (v > 1) throw std::invalid_argument("explicit pattern entries must be 0 or 1");
  }
  for (auto v : pattern.cycle) {
    if (v > 1) throw std::invalid_argument("explicit pattern entries must be 0 or 1");
    has_member |= (v == 1);
    has_gap |= (v == 0);
  }
  if (!has_member) throw std::invalid_argument("explicit pattern denotes a finite set");
  if (!has_gap) throw std::invalid_argument("explicit pattern denotes a cofinite set");
  return help_set(kind::explicit_pattern, std::move(pattern));
}
help_set help_set::empty() { return help_set(kind::empty, {}); }

bool help_set::member(const natural& z) const {
  if (z < 0) return false;
  switch (kind_) {
    case kind::evens:
      return z % 2 == 0;
    case kind::primes:
      if (fits_u64(z)) return primes::is_prime(static_cast<std::uint64_t>(z));
      return boost::multiprecision::miller_rabin_test(z, 25);
    case kind::selfcode: {
      auto decoded = decode_prefix_code(z);
      if (!decoded || decoded->empty()) return false;
      for (std::size_t i = 0; i < decoded->size(); ++i) {
        if ((*decoded)[i] != seq_(i)) return false;
      }
      return true;
    }
    case kind::explicit_pattern:
      if (!fits_u64(z)) {
        // Pattern is periodic past the prefix; reduce z modulo the cycle.
        natural offset = (z - seq_.prefix.size()) % seq_.cycle.size();
        return seq_.cycle[static_cast<std::size_t>(offset)] != 0;
      }
      return seq_(static_cast<std::size_t>(z)) != 0;
    case kind::empty:
      return false;
  }
  return false;
}

natural help_set::enumerate(std::uint64_t n) const {
  switch (kind_) {
    case kind::evens:
      return natural(n) * 2;
    case kind::primes:
      return primes::nth(n);
    case kind::selfcode:
      return prefix_code(seq_.take(n + 1));
    case kind::explicit_pattern: {
      auto counts = count_pattern(seq_);
      std::uint64_t seen = 0;
      for (std::size_t i = 0; i < seq_.prefix.size(); ++i) {
        if (seq_.prefix[i] != 0) {
          if (seen == n) return i;
          ++seen;
        }
      }
      const std::uint64_t remaining = n - seen;
      const std::uint64_t full_cycles = remaining / counts.in_cycle;
      std::uint64_t within = remaining % counts.in_cycle;
      for (std::size_t i = 0; i < seq_.cycle.size(); ++i) {
        if (seq_.cycle[i] != 0) {
          if (within == 0) {
            return natural(seq_.prefix.size()) + natural(full_cycles) * seq_.cycle.size() + i;
          }
          --within;
        }
      }
      break;
    }
    case kind::empty:
      throw std::logic_error("the empty set has no enumeration");
  }
  throw std::logic_error("unreachable enumeration case");
}

std::uint64_t help_set::index_of(const natural& z) const {
  if (!member(z)) {
    throw std::invalid_argument(to_string(z) + " is not a member of the " + to_string(kind_) +
                                " help set");
  }
  switch (kind_) {
    case kind::evens:
      return static_cast<std::uint64_t>(z / 2);
    case kind::primes:
      return primes::count_below(static_cast<std::uint64_t>(z));
    case kind::selfcode:
      return decode_prefix_code(z)->size() - 1;
    case kind::explicit_pattern: {
      auto counts = count_pattern(seq_);
      const natural plen = seq_.prefix.size();
      if (z < plen) {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < static_cast<std::size_t>(z); ++i) idx += (seq_.prefix[i] != 0);
        return idx;
      }
      const natural offset = z - plen;
      const natural cycles = offset / seq_.cycle.size();
      const auto within = static_cast<std::size_t>(offset % seq_.cycle.size());
      natural idx = natural(counts.in_prefix) + cycles * counts.in_cycle;
      for (std::size_t i = 0; i < within; ++i) idx += (seq_.cycle[i] != 0);
      return static_cast<std::uint64_t>(idx);
    }
    case kind::empty:
      break;
  }
  throw std::logic_error("unreachable index case");
}

natural help_set::next_member(const natural& from) const {
  switch (kind_) {
    case kind::evens:
      return from % 2 == 0 ? from : from + 1;
    case kind::selfcode: {
      for (std::uint64_t n = 0;; ++n) {
        natural e = enumerate(n);
        if (e >= from) return e;
      }
    }
    case kind::empty:
      throw std::logic_error("the empty set has no members");
    default: {
      natural z = from;
      while (!member(z)) ++z;
      return z;
    }
  }
}

std::string to_string(help_set::kind k) {
  switch (k) {
    case help_set::kind::evens: return "evens";
    case help_set::kind::primes: return "primes";
    case help_set::kind::selfcode: return "selfcode";
    case help_set::kind::explicit_pattern: return "explicit";
    case help_set::kind::empty: return "empty";
  }
  return "unknown";
}

}  // namespace genco
