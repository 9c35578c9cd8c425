#include "genco/sequence.hpp"

#include <stdexcept>

namespace genco {

std::uint64_t eventually_periodic::operator()(std::size_t n) const {
  if (n < prefix.size()) return prefix[n];
  if (cycle.empty()) throw std::invalid_argument("eventually periodic sequence with empty cycle");
  return cycle[(n - prefix.size()) % cycle.size()];
}

std::vector<std::uint64_t> eventually_periodic::take(std::size_t n) const {
  std::vector<std::uint64_t> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back((*this)(i));
  return out;
}

}  // namespace genco
