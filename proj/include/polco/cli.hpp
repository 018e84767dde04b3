#pragma once

#include <iosfwd>

namespace polco::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kValidationError = 3,
};

/// Entry point of the `polco` tool: analyze, generate, verify, constants.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polco::cli
