#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace genco {

// Precondition failures on conditions (restrict of a non-member, meet of incomparable stems, ...).
class condition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A user-supplied oracle broke its contract (witness with the wrong stem, extend that does not land in D).
class contract_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Text that does not parse: sequences, condition reprs, transcripts.
class malformed_input : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Schema or value error in a configuration, annotated with the offending path.
class config_error : public std::runtime_error {
 public:
  config_error(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// A search ran out of its step budget. Raised for dishonest dense sets or starving enumerations.
class fuel_exhausted : public std::runtime_error {
 public:
  explicit fuel_exhausted(const std::string& what, std::optional<std::uint64_t> step = std::nullopt)
      : std::runtime_error(what), step_(step) {}

  const std::optional<std::uint64_t>& step() const noexcept { return step_; }

 private:
  std::optional<std::uint64_t> step_;
};

}  // namespace genco
