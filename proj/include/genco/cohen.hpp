#pragma once

#include "genco/report.hpp"
#include "genco/sequence.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace genco {

/// Finite binary string; every element is 0 or 1.
using bit_string = std::vector<std::uint8_t>;

std::string render_bits(const bit_string& bits);  // "0110", "-" when empty
bit_string parse_bits(std::string_view text);     // inverse; throws malformed_input

/// A dense set of Cohen conditions (finite binary strings).
class cohen_dense {
 public:
  virtual ~cohen_dense() = default;
  /// Some p' ⊒ p with member(p') true.
  virtual bit_string extend(const bit_string& p) const = 0;
  virtual bool member(const bit_string& p) const = 0;
};

struct contains_word {
  bit_string w;
  friend bool operator==(const contains_word&, const contains_word&) = default;
};
struct min_length {
  std::uint64_t n = 0;
  friend bool operator==(const min_length&, const min_length&) = default;
};
/// Dense but not open; verification reads membership off the recorded snapshots.
struct ends_with_word {
  bit_string w;
  friend bool operator==(const ends_with_word&, const ends_with_word&) = default;
};

using cohen_spec = std::variant<contains_word, min_length, ends_with_word>;

std::shared_ptr<const cohen_dense> make_cohen_dense(const cohen_spec& spec);

using cohen_roster = std::vector<std::shared_ptr<const cohen_dense>>;

cohen_roster make_cohen_roster(const std::vector<cohen_spec>& specs);

/// Snapshot at stage i: p right after meeting roster1, q right after meeting roster2.
struct pair_stage {
  std::uint64_t index = 0;
  bit_string p;
  bit_string q;
  friend bool operator==(const pair_stage&, const pair_stage&) = default;
};

struct pair_transcript {
  std::vector<pair_stage> stages;
  bit_string c1;
  bit_string c2;
  friend bool operator==(const pair_transcript&, const pair_transcript&) = default;
};

/// Lines `STAGE <i> P <bits> Q <bits>`, then `C1 <bits>` and `C2 <bits>`.
std::string render_pair_transcript(const pair_transcript& t);
pair_transcript parse_pair_transcript(std::string_view text);

/// Builds c1, c2 meeting their rosters (cycled) such that x is read off c2 at the 1-positions of
/// c1. Per stage: p meets roster1, q codes x at p's fresh 1s (0 elsewhere), q meets roster2, p
/// is padded with 0s, then a marker 1 on p pairs with the next x bit on q.
/// x must be binary. Throws contract_violation (with the stage) for a misbehaving oracle.
pair_transcript build_pair(const cohen_roster& roster1, const cohen_roster& roster2,
                           const eventually_periodic& x, std::uint64_t stages);

/// x(j) = c2(m_j) for the j-th 1-position m_j of c1, j < count. Throws std::invalid_argument
/// when c1 has too few ones or a position falls outside c2.
bit_string decode_pair(const bit_string& c1, const bit_string& c2, std::size_t count);

verification_report verify_pair(const cohen_roster& roster1, const cohen_roster& roster2,
                                const eventually_periodic& x, const pair_transcript& t);

}  // namespace genco
