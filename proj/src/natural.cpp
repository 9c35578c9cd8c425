#include "genco/natural.hpp"

#include "genco/errors.hpp"

#include <algorithm>
#include <cctype>

namespace genco {

std::string to_string(const natural& value) { return value.str(); }

natural parse_natural(std::string_view text) {
  if (text.empty()) {
    throw malformed_input("expected a natural number, got an empty token");
  }
  natural value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw malformed_input("expected a natural number, got '" + std::string(text) + "'");
    }
    value *= 10;
    value += c - '0';
  }
  return value;
}

bool is_prefix(const node& a, const node& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

node append(node t, natural z) {
  t.push_back(std::move(z));
  return t;
}

std::string render_sequence(const node& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += values[i].str();
  }
  out += ']';
  return out;
}

std::string render_sequence(const std::vector<std::uint64_t>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(values[i]);
  }
  out += ']';
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

node parse_sequence(std::string_view text) {
  auto body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw malformed_input("expected a bracketed sequence like [1,2,3], got '" + std::string(text) + "'");
  }
  body = trim(body.substr(1, body.size() - 2));
  node out;
  if (body.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    auto token = trim(body.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - start));
    out.push_back(parse_natural(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace genco
