#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace legkit::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kUsageError = 2,
  kInputFileError = 3,
  kConvergenceError = 4,
};

/// Runs one invocation. args excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace legkit::cli
