#pragma once

#include "genco/help_set.hpp"
#include "genco/natural.hpp"
#include "genco/sequence.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace genco {

/// Fiber labelling: θ(n) = 2-adic valuation of n+1. Every fiber is infinite.
std::uint64_t theta(std::uint64_t n);

/// k-th element of θ⁻¹(m), i.e. (2k+1)·2^m − 1. Throws std::overflow_error past 64 bits.
std::uint64_t theta_fiber(std::uint64_t m, std::uint64_t k);

/// η_A(z) = θ(e_A⁻¹(z)). Throws std::invalid_argument when z ∉ A.
std::uint64_t eta(const help_set& a, const natural& z);

/// k-th smallest z ∈ A with η_A(z) = m.
natural eta_fiber_element(const help_set& a, std::uint64_t m, std::uint64_t k);

/// n-th element of the self-coding set of `abar`: code(abar↾(n+1)).
natural selfcode_element(const eventually_periodic& abar, std::uint64_t n);

/// Pulls the next element of an ascending stream; empty when the stream has stalled.
using element_stream = std::function<std::optional<natural>()>;

/// Reads abar↾n off any infinite subset of a self-coding set. Every pulled element is decoded and
/// checked against the others; at most `fuel` elements are pulled.
/// Throws malformed_input naming the offending value, or fuel_exhausted.
std::vector<std::uint64_t> recover_from_subset(const element_stream& next, std::size_t n,
                                               std::uint64_t fuel);

/// The A-encoded prefix of g: labels η_A(g(n)) at the positions n where g(n) ∈ A, in order.
/// Needs only membership queries to A and the values of g.
std::vector<std::uint64_t> decode(const help_set& a, std::span<const natural> g);

}  // namespace genco
