#include "genco/coding.hpp"

#include "genco/errors.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace genco {

std::uint64_t theta(std::uint64_t n) {
  const std::uint64_t succ = n + 1;
  if (succ == 0) return 64;  // n + 1 == 2^64
  return static_cast<std::uint64_t>(std::countr_zero(succ));
}

std::uint64_t theta_fiber(std::uint64_t m, std::uint64_t k) {
  if (m >= 64) throw std::overflow_error("theta fiber index exceeds 64 bits");
  const unsigned __int128 value = (static_cast<unsigned __int128>(2) * k + 1) << m;
  if (value - 1 > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("theta fiber index exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(value - 1);
}

std::uint64_t eta(const help_set& a, const natural& z) { return theta(a.index_of(z)); }

natural eta_fiber_element(const help_set& a, std::uint64_t m, std::uint64_t k) {
  return a.enumerate(theta_fiber(m, k));
}

natural selfcode_element(const eventually_periodic& abar, std::uint64_t n) {
  return prefix_code(abar.take(n + 1));
}

std::vector<std::uint64_t> recover_from_subset(const element_stream& next, std::size_t n,
                                               std::uint64_t fuel) {
  std::vector<std::uint64_t> longest;
  for (std::uint64_t pulled = 0; pulled < fuel; ++pulled) {
    auto element = next();
    if (!element) {
      throw fuel_exhausted("element stream stalled after " + std::to_string(pulled) +
                           " elements");
    }
    auto decoded = decode_prefix_code(*element);
    if (!decoded || decoded->empty()) {
      throw malformed_input("element " + to_string(*element) + " is not a prefix code");
    }
    const auto& shorter = decoded->size() < longest.size() ? *decoded : longest;
    const auto& longer = decoded->size() < longest.size() ? longest : *decoded;
    if (!std::equal(shorter.begin(), shorter.end(), longer.begin())) {
      throw malformed_input("element " + to_string(*element) +
                            " decodes to a prefix inconsistent with earlier elements");
    }
    if (decoded->size() > longest.size()) longest = std::move(*decoded);
    if (longest.size() >= n) {
      longest.resize(n);
      return longest;
    }
  }
  throw fuel_exhausted("no element with code length " + std::to_string(n) + " within " +
                       std::to_string(fuel) + " elements");
}

std::vector<std::uint64_t> decode(const help_set& a, std::span<const natural> g) {
  std::vector<std::uint64_t> out;
  for (const auto& value : g) {
    if (a.member(value)) out.push_back(eta(a, value));
  }
  return out;
}

}  // namespace genco
