#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thooks::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,              // success, or every checked cell verified
  kCounterexample = 1,  // a verification sweep found a counterexample
  kUsage = 2,           // malformed arguments or a refused computation
};

/// Runs the command line `args` (args[0] is the program name). Normal
/// output goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thooks::cli
