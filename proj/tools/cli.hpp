#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpj::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInvalidParameters = 2,
  kResonance = 3,
  kParseError = 4,
  kDegreeCap = 5,
};

/// Runs one `fpj` invocation; `args` excludes the program name. The document
/// goes to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpj::cli
