#pragma once

#include "genco/condition.hpp"
#include "genco/floor_rule.hpp"
#include "genco/help_set.hpp"
#include "genco/natural.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace genco {

// ---------------------------------------------------------------------------------------------
// Declarative descriptions

/// {T : |Stem(T)| >= n}.
struct stem_length {
  std::uint64_t n = 0;
  friend bool operator==(const stem_length&, const stem_length&) = default;
};

/// {T : every step z from a node at level l above the stem has z > f(l)}.
struct dominate {
  floor_rule f;
  friend bool operator==(const dominate&, const dominate&) = default;
};

/// {T : some stem entry is >= k}.
struct stem_hits {
  natural k = 0;
  friend bool operator==(const stem_hits&, const stem_hits&) = default;
};

/// A stem s matches when |s| >= max(min_len, |tail|) and its last |tail| entries are pointwise
/// >= tail. The witness for a matching stem is the condition with that stem and `floor` (if any).
struct stem_pattern {
  std::uint64_t min_len = 0;
  std::vector<natural> tail;
  std::optional<floor_rule> floor;
  friend bool operator==(const stem_pattern&, const stem_pattern&) = default;
};

/// Union over the patterns of {T : T <= witness(s)} for matching prefixes s of Stem(T).
struct user_stems {
  std::vector<stem_pattern> patterns;
  friend bool operator==(const user_stems&, const user_stems&) = default;
};

using dense_spec = std::variant<stem_length, dominate, stem_hits, user_stems>;

std::string describe(const dense_spec& spec);

// ---------------------------------------------------------------------------------------------
// Runtime objects

enum class membership { yes, no, unknown };

class dense_set {
 public:
  virtual ~dense_set() = default;
  virtual membership member(const hechler_condition& t) const = 0;
};

/// A dense set presented through its stem set S = {Stem(T) : T ∈ D}.
class stem_dense_set : public dense_set {
 public:
  /// A condition in D with stem exactly s, when s ∈ S.
  virtual std::optional<hechler_condition> member_witness(const node& s) const = 0;

  /// Least z >= from among the rank-decreasing successors of s. Contract (honesty): for s ∉ S the
  /// enumeration is infinite and each enumerated z strictly lowers the reachability rank.
  /// An empty result means the enumeration has run dry.
  virtual std::optional<natural> next_good_successor(const node& s, const natural& from) const = 0;

  /// Nodes with equal keys have the same reachability structure. Used to memoize rank searches;
  /// the identity is always correct.
  virtual node rank_key(const node& s) const { return s; }
};

/// A dense set met by pruning a condition without moving its stem.
class pruning_dense_set : public dense_set {
 public:
  /// T' <= T in D with Stem(T') = Stem(T).
  virtual hechler_condition refine(const hechler_condition& t) const = 0;
};

std::shared_ptr<const dense_set> make_dense_set(const dense_spec& spec);

inline membership member(const dense_set& d, const hechler_condition& t) { return d.member(t); }

// ---------------------------------------------------------------------------------------------
// Rank analysis and the extension searches

/// Least r <= max_rank such that t is r-reachable with the successor search truncated to the first
/// `width` good successors. A node outside S is r-reachable when at least ceil(width/2) of those
/// successors are reachable with rank < r.
std::optional<std::uint64_t> rank_bounded(const stem_dense_set& d, const node& t,
                                          std::uint64_t max_rank, std::uint64_t width);

inline constexpr std::uint64_t kDefaultFuel = 100000;

/// Finds T'' ≤_A T inside D. Pruning sets prune in place; stem-based sets descend from Stem(T)
/// along the least good successor that T admits and A does not contain, until a stem of S is
/// reached, and return witness ∩ T↾stem.
/// Throws fuel_exhausted (dishonest D) or contract_violation (witness with a foreign stem).
hechler_condition extend_in_a(const hechler_condition& t, const dense_set& d, const help_set& a,
                              std::uint64_t fuel = kDefaultFuel);

/// Encodes one label: T↾(Stem(T)⌢z) for the least z ∈ A with η_A(z) = m that T admits.
hechler_condition code_step(const hechler_condition& t, const help_set& a, std::uint64_t m,
                            std::uint64_t fuel = kDefaultFuel);

}  // namespace genco
