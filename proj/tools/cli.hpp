#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lexgotz::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternal = 1,
  kUsage = 2,
  kCounterexample = 3,
};

/// Runs one invocation. `args` excludes the program name; `in` backs ideal
/// input when no file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lexgotz::cli
