#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deplen::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kDataError = 2,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit status. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deplen::cli
