#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sbn {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,
  kExitUsage = 2,
  kExitGuard = 3,
  /// A certificate failed revalidation or an internal check fired (a bug).
  kExitInternal = 4,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sbn
