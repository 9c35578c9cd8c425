#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace genco {

/// Total sequence s(n) = prefix[n] for n < |prefix|, else cycle[(n - |prefix|) mod |cycle|].
/// This is how targets x and help reals are given in configs.
struct eventually_periodic {
  std::vector<std::uint64_t> prefix;
  std::vector<std::uint64_t> cycle{0};

  std::uint64_t operator()(std::size_t n) const;

  /// s↾n.
  std::vector<std::uint64_t> take(std::size_t n) const;

  friend bool operator==(const eventually_periodic&, const eventually_periodic&) = default;
};

}  // namespace genco
