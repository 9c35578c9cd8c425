#pragma once

#include "genco/condition.hpp"
#include "genco/dense.hpp"
#include "genco/help_set.hpp"
#include "genco/report.hpp"
#include "genco/sequence.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace genco {

/// A ≤_A step that met roster entry `roster_index`.
struct meet_entry {
  std::uint64_t roster_index = 0;
  hechler_condition condition;
  friend bool operator==(const meet_entry&, const meet_entry&) = default;
};

/// A one-entry stem extension by z ∈ A carrying label x(code_index).
struct code_entry {
  std::uint64_t code_index = 0;
  natural z;
  hechler_condition condition;
  friend bool operator==(const code_entry&, const code_entry&) = default;
};

using transcript_entry = std::variant<meet_entry, code_entry>;

struct transcript_header {
  std::string roster_hash;
  std::string help_json;    // canonical JSON of the help set ({"kind":"empty"} for plain runs)
  std::string target_json;  // canonical JSON of x, or "null" for plain runs
  std::uint64_t steps = 0;
  friend bool operator==(const transcript_header&, const transcript_header&) = default;
};

/// Replayable log of a generic construction; conditions form a descending chain from the full tree.
struct run_transcript {
  transcript_header header;
  std::vector<transcript_entry> entries;
  node g;  // final stem
  friend bool operator==(const run_transcript&, const run_transcript&) = default;
};

/// Line format:
///   ROSTER <sha256 hex>
///   HELP <canonical json>
///   TARGET <canonical json>
///   STEPS <n>
///   MEET <i> <condition>  |  CODE <j> <z> <condition>   (repeated)
///   G [a,b,...]
std::string render_transcript(const run_transcript& t);

/// Throws malformed_input with the offending line number.
run_transcript parse_transcript(std::string_view text);

inline constexpr std::string_view kNullTarget = "null";

/// Alternates ≤_A meets of the (cycled) roster with coding steps for x(0), x(1), ...
/// starting from the full tree. fuel_exhausted carries the failing step index.
run_transcript build_coded_generic(const std::vector<dense_spec>& roster, const help_set& a,
                                   const eventually_periodic& x, std::uint64_t steps,
                                   std::uint64_t fuel = kDefaultFuel);

/// Meets the cycled roster without coding (A-avoidance vacuous).
run_transcript build_plain_generic(const std::vector<dense_spec>& roster, std::uint64_t steps,
                                   std::uint64_t fuel = kDefaultFuel);

/// Independent re-check of a transcript; never re-runs the builder. Pass x = nullopt and the
/// empty help set for plain transcripts.
verification_report verify_transcript(const std::vector<dense_spec>& roster, const help_set& a,
                                      const std::optional<eventually_periodic>& x,
                                      const run_transcript& t);

/// The generic prefix: the stem of the last condition (empty for an empty run).
/// Throws malformed_input when it disagrees with the footer.
node extract_g(const run_transcript& t);

}  // namespace genco
