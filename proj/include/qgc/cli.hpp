#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace qgc::cli {

/// Process exit codes; each failure class has its own code.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kIo = 3,
  kKeyFormat = 4,
  kImageFormat = 5,
  kValidation = 6,
};

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out`; one-line diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qgc::cli
