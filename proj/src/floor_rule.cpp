#include "genco/floor_rule.hpp"

#include <algorithm>

namespace genco {

natural floor_rule::operator()(std::size_t level) const {
  if (level < table.size()) return table[level];
  return slope * level + intercept;
}

floor_rule constant_floor(natural value) { return floor_rule{{}, 0, std::move(value)}; }

namespace {

// Least n >= start with lo_slope*n + lo_icpt <= hi_slope*n + hi_icpt failing for good, i.e. the
// first level from which `winner` stays strictly above `loser` (winner has the larger slope).
std::size_t strict_takeover(const natural& win_slope, const natural& win_icpt,
                            const natural& lose_slope, const natural& lose_icpt,
                            std::size_t start) {
  if (lose_icpt < win_icpt) return start;
  // win_slope > lose_slope; strict above iff n > (lose_icpt - win_icpt) / (win_slope - lose_slope)
  natural cross = (lose_icpt - win_icpt) / (win_slope - lose_slope) + 1;
  if (cross <= start) return start;
  return static_cast<std::size_t>(cross);
}

}  // namespace

floor_rule pointwise_max(const floor_rule& lhs, const floor_rule& rhs) {
  const std::size_t base = std::max(lhs.table.size(), rhs.table.size());
  floor_rule out;
  std::size_t table_len = base;
  if (lhs.slope == rhs.slope) {
    out.slope = lhs.slope;
    out.intercept = std::max(lhs.intercept, rhs.intercept);
  } else if (lhs.slope > rhs.slope) {
    out.slope = lhs.slope;
    out.intercept = lhs.intercept;
    table_len = strict_takeover(lhs.slope, lhs.intercept, rhs.slope, rhs.intercept, base);
  } else {
    out.slope = rhs.slope;
    out.intercept = rhs.intercept;
    table_len = strict_takeover(rhs.slope, rhs.intercept, lhs.slope, lhs.intercept, base);
  }
  out.table.reserve(table_len);
  for (std::size_t n = 0; n < table_len; ++n) {
    out.table.push_back(std::max(lhs(n), rhs(n)));
  }
  return out;
}

std::optional<std::size_t> first_violation(const floor_rule& upper, const floor_rule& lower,
                                           std::size_t from) {
  const std::size_t tail = std::max({upper.table.size(), lower.table.size(), from});
  for (std::size_t n = from; n < tail; ++n) {
    if (upper(n) < lower(n)) return n;
  }
  // Both affine from `tail` on: diff(n) = (su - sl) n + (iu - il).
  natural diff_at_tail = upper(tail) - lower(tail);
  if (upper.slope >= lower.slope) {
    if (diff_at_tail < 0) return tail;
    return std::nullopt;
  }
  if (diff_at_tail < 0) return tail;
  // diff decreases by (sl - su) per level; first n with diff(n) < 0.
  natural drop = lower.slope - upper.slope;
  natural steps = diff_at_tail / drop + 1;
  return tail + static_cast<std::size_t>(steps);
}

}  // namespace genco
