#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phylotrop::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerdictFailed = 1,  // verdict false, violations found, input not realizable
  kUsageError = 2,     // bad flags, unreadable or malformed input
};

/// Runs one command line. args[0] is the program name. Reports go to `out`,
/// diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phylotrop::cli
