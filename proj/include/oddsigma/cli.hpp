#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddsigma::cli {

enum ExitCode : int {
  kOk = 0,
  kCounterexample = 1,  // verification found a failing n
  kUsage = 2,           // bad flags, domain or divergence errors
};

/// Runs one CLI invocation. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddsigma::cli
