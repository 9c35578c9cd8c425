#include "genco/report.hpp"

#include <algorithm>

namespace genco {

bool verification_report::all_passed() const { return failures() == 0; }

std::size_t verification_report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.passed; }));
}

std::string verification_report::render() const {
  std::string out;
  for (const auto& e : entries) {
    out += e.passed ? "PASS " : "FAIL ";
    out += e.check;
    if (!e.locus.empty()) out += " " + e.locus;
    if (!e.passed) out += ": " + e.detail;
    out += '\n';
  }
  return out;
}

}  // namespace genco
