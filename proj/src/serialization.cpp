#include "genco/serialization.hpp"

#include "genco/errors.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace genco {

namespace schema {

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw config_error(path, "expected an object");
}

void reject_unknown_keys(const json& j, const std::string& path,
                         std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known |= (key == a);
    if (!known) throw config_error(path.empty() ? key : path + "." + key, "unknown key");
  }
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  auto it = j.find(key);
  const std::string where = path.empty() ? key : path + "." + key;
  if (it == j.end()) throw config_error(where, "missing required key");
  return *it;
}

std::uint64_t as_natural(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) {
    if (j.is_number_integer()) throw config_error(path, "expected a natural number, got a negative");
    throw config_error(path, "expected a natural number");
  }
  return j.get<std::uint64_t>();
}

std::vector<std::uint64_t> as_naturals(const json& j, const std::string& path) {
  if (!j.is_array()) throw config_error(path, "expected an array of natural numbers");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_natural(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw config_error(path, "expected a string");
  return j.get<std::string>();
}

}  // namespace schema

namespace {

using namespace schema;

std::string sub(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

json natural_json(const natural& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw std::out_of_range("value " + v.str() + " does not fit a JSON natural");
  }
  return static_cast<std::uint64_t>(v);
}

json naturals_json(const std::vector<natural>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(natural_json(v));
  return out;
}

std::vector<natural> to_naturals(const std::vector<std::uint64_t>& values) {
  return {values.begin(), values.end()};
}

floor_rule floor_from_fields(const json& j, const std::string& path) {
  floor_rule f;
  f.table = to_naturals(as_naturals(field(j, "table", path), sub(path, "table")));
  f.slope = as_natural(field(j, "a", path), sub(path, "a"));
  f.intercept = as_natural(field(j, "b", path), sub(path, "b"));
  return f;
}

bit_string bits_from_json(const json& j, const std::string& path) {
  const std::string text = as_string(j, path);
  bit_string out;
  for (char c : text) {
    if (c != '0' && c != '1') throw config_error(path, "expected a string of 0/1 characters");
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

std::string bits_text(const bit_string& bits) {
  std::string out;
  for (auto b : bits) out += static_cast<char>('0' + b);
  return out;
}

// Exponents p^(a+1) with huge a are not meaningful at desk scale.
constexpr std::uint64_t kMaxSelfCodeEntry = 1024;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

json to_json(const eventually_periodic& s) {
  return json{{"prefix", s.prefix}, {"cycle", s.cycle}};
}

eventually_periodic sequence_from_json(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown_keys(j, path, {"prefix", "cycle"});
  eventually_periodic s;
  s.prefix = as_naturals(field(j, "prefix", path), sub(path, "prefix"));
  s.cycle = as_naturals(field(j, "cycle", path), sub(path, "cycle"));
  if (s.cycle.empty()) throw config_error(sub(path, "cycle"), "cycle must be nonempty");
  return s;
}

json to_json(const help_set& a) {
  switch (a.which()) {
    case help_set::kind::evens:
      return json{{"kind", "evens"}};
    case help_set::kind::primes:
      return json{{"kind", "primes"}};
    case help_set::kind::selfcode:
      return json{{"kind", "selfcode"}, {"abar", to_json(a.sequence())}};
    case help_set::kind::explicit_pattern:
      return json{{"kind", "explicit"},
                  {"prefix", a.sequence().prefix},
                  {"cycle", a.sequence().cycle}};
    case help_set::kind::empty:
      return json{{"kind", "empty"}};
  }
  throw std::logic_error("unknown help set kind");
}

help_set help_set_from_json(const json& j, const std::string& path) {
  require_object(j, path);
  const std::string kind = as_string(field(j, "kind", path), sub(path, "kind"));
  if (kind == "evens" || kind == "primes") {
    reject_unknown_keys(j, path, {"kind"});
    return kind == "evens" ? help_set::evens() : help_set::primes();
  }
  if (kind == "selfcode") {
    reject_unknown_keys(j, path, {"kind", "abar"});
    auto abar = sequence_from_json(field(j, "abar", path), sub(path, "abar"));
    for (auto v : abar.prefix) {
      if (v > kMaxSelfCodeEntry) throw config_error(sub(path, "abar"), "entries must be <= 1024");
    }
    for (auto v : abar.cycle) {
      if (v > kMaxSelfCodeEntry) throw config_error(sub(path, "abar"), "entries must be <= 1024");
    }
    return help_set::selfcode(std::move(abar));
  }
  if (kind == "explicit") {
    reject_unknown_keys(j, path, {"kind", "prefix", "cycle"});
    eventually_periodic pattern;
    pattern.prefix = as_naturals(field(j, "prefix", path), sub(path, "prefix"));
    pattern.cycle = as_naturals(field(j, "cycle", path), sub(path, "cycle"));
    try {
      return help_set::explicit_pattern(std::move(pattern));
    } catch (const std::invalid_argument& e) {
      throw config_error(path, e.what());
    }
  }
  throw config_error(sub(path, "kind"), "unknown help set kind '" + kind + "'");
}

json to_json(const floor_rule& f) {
  return json{{"table", naturals_json(f.table)},
              {"a", natural_json(f.slope)},
              {"b", natural_json(f.intercept)}};
}

json to_json(const dense_spec& spec) {
  return std::visit(
      overloaded{
          [](const stem_length& s) { return json{{"type", "stem_length"}, {"n", s.n}}; },
          [](const dominate& s) {
            json out = to_json(s.f);
            out["type"] = "dominate";
            return out;
          },
          [](const stem_hits& s) { return json{{"type", "stem_hits"}, {"k", natural_json(s.k)}}; },
          [](const user_stems& s) {
            json patterns = json::array();
            for (const auto& p : s.patterns) {
              json entry{{"min_len", p.min_len}, {"tail", naturals_json(p.tail)}};
              if (p.floor) entry["floor"] = to_json(*p.floor);
              patterns.push_back(std::move(entry));
            }
            return json{{"type", "user_stems"}, {"patterns", std::move(patterns)}};
          },
      },
      spec);
}

dense_spec dense_spec_from_json(const json& j, const std::string& path) {
  require_object(j, path);
  const std::string type = as_string(field(j, "type", path), sub(path, "type"));
  if (type == "stem_length") {
    reject_unknown_keys(j, path, {"type", "n"});
    return stem_length{as_natural(field(j, "n", path), sub(path, "n"))};
  }
  if (type == "dominate") {
    reject_unknown_keys(j, path, {"type", "table", "a", "b"});
    return dominate{floor_from_fields(j, path)};
  }
  if (type == "stem_hits") {
    reject_unknown_keys(j, path, {"type", "k"});
    return stem_hits{as_natural(field(j, "k", path), sub(path, "k"))};
  }
  if (type == "user_stems") {
    reject_unknown_keys(j, path, {"type", "patterns"});
    const json& list = field(j, "patterns", path);
    const std::string list_path = sub(path, "patterns");
    if (!list.is_array() || list.empty()) {
      throw config_error(list_path, "expected a nonempty array of patterns");
    }
    user_stems out;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string p_path = list_path + "[" + std::to_string(i) + "]";
      const json& entry = list[i];
      require_object(entry, p_path);
      reject_unknown_keys(entry, p_path, {"min_len", "tail", "floor"});
      stem_pattern p;
      if (entry.contains("min_len")) p.min_len = as_natural(entry["min_len"], sub(p_path, "min_len"));
      if (entry.contains("tail")) {
        p.tail = to_naturals(as_naturals(entry["tail"], sub(p_path, "tail")));
      }
      if (entry.contains("floor")) {
        const json& f = entry["floor"];
        const std::string f_path = sub(p_path, "floor");
        require_object(f, f_path);
        reject_unknown_keys(f, f_path, {"table", "a", "b"});
        p.floor = floor_from_fields(f, f_path);
      }
      out.patterns.push_back(std::move(p));
    }
    return out;
  }
  throw config_error(sub(path, "type"), "unknown dense set type '" + type + "'");
}

json to_json(const cohen_spec& spec) {
  return std::visit(
      overloaded{
          [](const contains_word& s) { return json{{"type", "contains"}, {"w", bits_text(s.w)}}; },
          [](const min_length& s) { return json{{"type", "min_len"}, {"n", s.n}}; },
          [](const ends_with_word& s) {
            return json{{"type", "ends_with"}, {"w", bits_text(s.w)}};
          },
      },
      spec);
}

cohen_spec cohen_spec_from_json(const json& j, const std::string& path) {
  require_object(j, path);
  const std::string type = as_string(field(j, "type", path), sub(path, "type"));
  if (type == "contains" || type == "ends_with") {
    reject_unknown_keys(j, path, {"type", "w"});
    bit_string w = bits_from_json(field(j, "w", path), sub(path, "w"));
    if (type == "contains") return contains_word{std::move(w)};
    return ends_with_word{std::move(w)};
  }
  if (type == "min_len") {
    reject_unknown_keys(j, path, {"type", "n"});
    return min_length{as_natural(field(j, "n", path), sub(path, "n"))};
  }
  throw config_error(sub(path, "type"), "unknown Cohen dense set type '" + type + "'");
}

json roster_json(const std::vector<dense_spec>& roster) {
  json out = json::array();
  for (const auto& spec : roster) out.push_back(to_json(spec));
  return out;
}

std::string canonical(const json& j) { return j.dump(); }

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::string out;
  out.reserve(length * 2);
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

std::string roster_hash(const std::vector<dense_spec>& roster) {
  return sha256_hex(canonical(roster_json(roster)));
}

}  // namespace genco
