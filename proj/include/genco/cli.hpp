#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genco::cli {

enum exit_code : int {
  ok = 0,
  verification_failed = 1,
  config_failure = 2,
  fuel_failure = 3,
  io_failure = 4,
};

/// Runs one command. `args` excludes the program name. Payload goes to `out`, diagnostics to
/// `err`. Fuel defaults to 10^5 and can be overridden through GENCO_FUEL.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genco::cli
