#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace enumlab::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // the report's verdict is "no" (not co-order, violations, invalid)
  kUsage = 2,
  kRuntime = 3,   // non-halting run, inconsistency, malformed input
};

/// Runs one command line; args exclude the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace enumlab::cli
