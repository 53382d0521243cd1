#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sasakit::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNotGood = 2,
  kNoCalabiYau = 3,
  kNumericalFailure = 4,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out` as JSON, diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sasakit::cli
