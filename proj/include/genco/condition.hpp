#pragma once

#include "genco/floor_rule.hpp"
#include "genco/help_set.hpp"
#include "genco/natural.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace genco {

/// Finitely many excluded successor values per node.
using exclusion_map = std::map<node, std::set<natural>>;

/// A finitely presented Tree-Hechler condition: the tree of all nodes comparable with the stem
/// whose every step z taken from a node v ⊒ stem avoids exclusions(v) and exceeds floor(|v|).
/// Each node above the stem therefore keeps cofinitely many successors.
///
/// Construction normalizes the presentation: exclusion keys must extend the stem (or equal it),
/// empty exclusion sets are dropped. The default-constructed value is the full tree.
class hechler_condition {
 public:
  hechler_condition() = default;
  /// Throws condition_error when an exclusion key does not extend the stem.
  explicit hechler_condition(node stem, exclusion_map exclusions = {},
                             std::optional<floor_rule> floor = std::nullopt);

  const node& stem() const noexcept { return stem_; }
  const exclusion_map& exclusions() const noexcept { return exclusions_; }
  const std::optional<floor_rule>& floor() const noexcept { return floor_; }

  /// Whether z may follow v (v ⊒ stem assumed).
  bool admits_step(const node& v, const natural& z) const;

  friend bool operator==(const hechler_condition&, const hechler_condition&) = default;

 private:
  node stem_;
  exclusion_map exclusions_;
  std::optional<floor_rule> floor_;
};

inline hechler_condition full_tree() { return hechler_condition{}; }

bool contains(const hechler_condition& t, const node& u);

/// {z : t⌢z ∉ T} for t ∈ T above the stem. Throws condition_error otherwise.
std::set<natural> excluded_successors(const hechler_condition& t, const node& at);

/// T↾t. Throws condition_error when t ∉ T. Restricting to a node at or below the stem is the
/// identity.
hechler_condition restrict(const hechler_condition& t, const node& at);

/// Intersection of two conditions with comparable stems; empty when the longer stem is killed by
/// the other condition. Throws condition_error on incomparable stems.
std::optional<hechler_condition> meet(const hechler_condition& lhs, const hechler_condition& rhs);

enum class verdict { yes, no, unknown };

struct extends_result {
  verdict answer = verdict::unknown;
  std::optional<node> witness;  // a node in T2 \ T1 when answer == no
};

/// Decides T2 ⊆ T1. The table+affine presentation makes the syntactic test complete, so
/// `unknown` is never produced by this implementation; callers still handle it.
extends_result extends(const hechler_condition& t2, const hechler_condition& t1);

struct bounded_result {
  bool consistent = true;       // no counterexample found inside the box
  std::optional<node> witness;  // first node (shortlex) in T2 \ T1 otherwise
};

/// Brute-force refutation search over the prefixes of stem(T2) and every stem(T2)⌢w in T2 with
/// |w| <= depth and entries of w <= width.
bounded_result extends_bounded(const hechler_condition& t2, const hechler_condition& t1,
                               std::size_t depth, std::uint64_t width);

/// t2 ⊒_A t1: t2 extends t1 and no new entry lies in A.
bool stem_extends_avoiding(const node& t2, const node& t1, const help_set& a);

enum class extends_a_failure { none, inclusion, stem_avoidance };

struct extends_a_result {
  verdict answer = verdict::unknown;
  extends_a_failure reason = extends_a_failure::none;
  std::optional<node> witness;
};

/// T2 ≤_A T1.
extends_a_result extends_a(const hechler_condition& t2, const hechler_condition& t1,
                           const help_set& a);

/// Structural validity: every exclusion key extends the stem, no empty exclusion sets.
bool is_well_formed(const hechler_condition& t);

/// `stem=[..];excl{[..]:{..};...};floor(table=[..],a=A,b=B)` or `floor(-)`.
std::string render(const hechler_condition& t);

/// Inverse of render; throws malformed_input.
hechler_condition parse_condition(std::string_view text);

}  // namespace genco
