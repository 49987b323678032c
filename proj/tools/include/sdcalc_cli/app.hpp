#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdcalc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,  // unreadable or invalid diagram content
  kUsageError = 2,         // bad arguments, missing files, operation preconditions
  kInternalError = 3,      // a library invariant failed; a bug
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdcalc::cli
