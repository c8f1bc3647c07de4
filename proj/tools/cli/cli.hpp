#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ivpoly::cli {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitNegative = 1,
  kExitError = 2,
  kExitBudget = 3,
};

/// Runs the command line `ivpoly <args...>`; args excludes the program name.
/// Reports go to out, structured errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ivpoly::cli
