#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace genco {

/// Unbounded natural number. Self-code elements outgrow 64 bits quickly, so every value that can
/// appear as a node entry uses arbitrary precision.
using natural = boost::multiprecision::cpp_int;

/// A finite sequence of naturals: an element of the full tree of finite sequences.
using node = std::vector<natural>;

std::string to_string(const natural& value);

/// Decimal digits only; throws malformed_input otherwise.
natural parse_natural(std::string_view text);

/// `a` is an initial segment of `b` (a ⊑ b).
bool is_prefix(const node& a, const node& b);

inline bool comparable(const node& a, const node& b) { return is_prefix(a, b) || is_prefix(b, a); }

node append(node t, natural z);

/// Renders `[a,b,c]` with no spaces.
std::string render_sequence(const node& values);
std::string render_sequence(const std::vector<std::uint64_t>& values);

/// Parses `[a,b,c]` (whitespace tolerated around tokens). Values may exceed 64 bits.
node parse_sequence(std::string_view text);

}  // namespace genco
