#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace elliptic_tilt::cli {

enum ExitCode : int
{
   kOk = 0,
   kFailure = 1,
   kParseError = 2,
   kInadmissible = 3,
};

/// Runs one invocation.  `args` excludes the program name.  Matrix
/// arguments that are omitted or "-" are read from `in`, one per line.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace elliptic_tilt::cli
