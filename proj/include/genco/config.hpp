#pragma once

#include "genco/cohen.hpp"
#include "genco/dense.hpp"
#include "genco/help_set.hpp"
#include "genco/sequence.hpp"
#include "genco/serialization.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace genco {

enum class poset_kind { hechler, cohen };

/// A run configuration. Hechler runs carry `help`, `dense` and `steps`; Cohen runs carry the two
/// rosters `cohen_dense`/`cohen_dense2` and `stages` (stored in `steps`).
struct run_config {
  poset_kind poset = poset_kind::hechler;
  std::optional<help_set> help;
  eventually_periodic target;
  std::vector<dense_spec> dense;
  std::vector<cohen_spec> cohen_dense;
  std::vector<cohen_spec> cohen_dense2;
  std::uint64_t steps = 0;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const run_config&, const run_config&) = default;
};

/// Strict parse. Throws config_error with a JSON path, or with the byte offset for syntax errors.
run_config parse_config(std::string_view text);

json to_json(const run_config& config);

/// Compact JSON with sorted keys; stable under parse/serialize round trips.
std::string canonical_config(const run_config& config);

}  // namespace genco
