#pragma once

#include "genco/cohen.hpp"
#include "genco/dense.hpp"
#include "genco/help_set.hpp"
#include "genco/sequence.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace genco {

// Canonical JSON forms of the configuration objects. Parsing is strict: unknown keys, wrong types
// and negative numbers raise config_error carrying the JSON path (e.g. `dense[0].n`).
// Canonical text is nlohmann's compact dump, whose object keys are sorted.

using json = nlohmann::json;

json to_json(const eventually_periodic& s);
eventually_periodic sequence_from_json(const json& j, const std::string& path);

json to_json(const help_set& a);
help_set help_set_from_json(const json& j, const std::string& path);

json to_json(const floor_rule& f);

json to_json(const dense_spec& spec);
dense_spec dense_spec_from_json(const json& j, const std::string& path);

json to_json(const cohen_spec& spec);
cohen_spec cohen_spec_from_json(const json& j, const std::string& path);

json roster_json(const std::vector<dense_spec>& roster);

std::string canonical(const json& j);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// SHA-256 of the canonical roster JSON.
std::string roster_hash(const std::vector<dense_spec>& roster);

// Field helpers shared with the config parser.
namespace schema {

void require_object(const json& j, const std::string& path);
void reject_unknown_keys(const json& j, const std::string& path,
                         std::initializer_list<std::string_view> allowed);
const json& field(const json& j, const std::string& key, const std::string& path);
std::uint64_t as_natural(const json& j, const std::string& path);
std::vector<std::uint64_t> as_naturals(const json& j, const std::string& path);
std::string as_string(const json& j, const std::string& path);

}  // namespace schema

}  // namespace genco
