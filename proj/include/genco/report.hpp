#pragma once

#include <string>
#include <vector>

namespace genco {

struct check_entry {
  std::string check;   // short name, e.g. "chain" or "code-label"
  bool passed = true;
  std::string locus;   // where: "step 12", "header", "position 40"
  std::string detail;
};

/// Outcome of an independent transcript check. Failures are entries, never exceptions.
struct verification_report {
  std::vector<check_entry> entries;

  void pass(std::string check, std::string locus = {}) {
    entries.push_back({std::move(check), true, std::move(locus), {}});
  }
  void fail(std::string check, std::string locus, std::string detail) {
    entries.push_back({std::move(check), false, std::move(locus), std::move(detail)});
  }

  bool all_passed() const;
  std::size_t failures() const;

  /// One line per entry: `PASS <check> [<locus>]` or `FAIL <check> <locus>: <detail>`.
  std::string render() const;
};

}  // namespace genco
