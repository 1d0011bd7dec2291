#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quadrica::cli {

/// Exit codes of the quadrica tool.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,    ///< verification failed, or the map is not quadratic
  kParse = 2,
  kCaps = 3,      ///< a size cap or the enumeration limit was exceeded
  kUsage = 4,     ///< bad arguments or mismatched structures
};

/// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadrica::cli
