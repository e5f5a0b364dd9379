#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kindex::cli {

enum ExitCode : int {
  kOk = 0,
  kBadInput = 1,
  kUnknownEntity = 2,
  kInternal = 3,
};

/// Runs one command line (without the program name). Results go to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kindex::cli
