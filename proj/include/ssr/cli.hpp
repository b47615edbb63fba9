#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ssr::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kIo = 2,
  kNumeric = 3,
};

/// Runs the `ssr` tool. args[0] is the program name. Results go to the
/// --out file, or to `out` when none is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssr::cli
