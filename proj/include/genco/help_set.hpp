#pragma once

#include "genco/natural.hpp"
#include "genco/sequence.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace genco {

/// Prime-power prefix code: code(s) = prod_{i<|s|} p_i^(s(i)+1).
natural prefix_code(const std::vector<std::uint64_t>& s);

/// Inverse of prefix_code. Empty optional when z is not a valid code (some p_i missing below the
/// largest prime factor, or a prime factor not among consecutive p_0, p_1, ...).
std::optional<std::vector<std::uint64_t>> decode_prefix_code(const natural& z);

/// An infinite, co-infinite set of naturals with decidable membership and a strictly increasing
/// enumeration e_A. Immutable.
class help_set {
 public:
  enum class kind { evens, primes, selfcode, explicit_pattern, empty };

  static help_set evens();
  static help_set primes();
  /// A_abar = { code(abar↾(k+1)) : k >= 0 }.
  static help_set selfcode(eventually_periodic abar);
  /// Characteristic-style listing: z is a member iff pattern(z) == 1. The cycle must contain both a
  /// 0 and a 1 (infinite and co-infinite); throws std::invalid_argument otherwise.
  static help_set explicit_pattern(eventually_periodic pattern);
  /// The empty set. Not a help set in the coding sense; makes A-avoidance vacuous.
  static help_set empty();

  kind which() const noexcept { return kind_; }
  const eventually_periodic& sequence() const noexcept { return seq_; }

  bool member(const natural& z) const;

  /// e_A(n).
  natural enumerate(std::uint64_t n) const;

  /// e_A^{-1}(z); throws std::invalid_argument when z is not a member.
  std::uint64_t index_of(const natural& z) const;

  /// Least member >= from. Unbounded for every kind except empty.
  natural next_member(const natural& from) const;

  friend bool operator==(const help_set&, const help_set&) = default;

 private:
  help_set(kind k, eventually_periodic seq) : kind_(k), seq_(std::move(seq)) {}

  kind kind_;
  eventually_periodic seq_;
};

std::string to_string(help_set::kind k);

}  // namespace genco
