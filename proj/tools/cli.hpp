#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orthoglide::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 1,
  kViolations = 2,
  kKinematicFailure = 3,
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orthoglide::cli
