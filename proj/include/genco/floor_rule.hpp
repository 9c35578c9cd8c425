#pragma once

#include "genco/natural.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace genco {

/// Level-wise lower bound f(n) = table[n] for n < |table|, f(n) = slope*n + intercept afterwards.
/// A condition carrying a floor admits a step z from a node at level n only if z > f(n).
struct floor_rule {
  std::vector<natural> table;
  natural slope = 0;
  natural intercept = 0;

  natural operator()(std::size_t level) const;

  friend bool operator==(const floor_rule&, const floor_rule&) = default;
};

/// Constant rule f(n) = value.
floor_rule constant_floor(natural value);

/// Pointwise maximum, again in table+affine form. The table runs up to the last level at which
/// the losing affine tail is still >= the winning one.
floor_rule pointwise_max(const floor_rule& lhs, const floor_rule& rhs);

/// Least level n >= from with upper(n) < lower(n), if any.
std::optional<std::size_t> first_violation(const floor_rule& upper, const floor_rule& lower,
                                           std::size_t from);

}  // namespace genco
