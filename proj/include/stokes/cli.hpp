#pragma once

#include <string>
#include <vector>

namespace stokes::cli {

enum ExitCode : int { kSuccess = 0, kInvalidInput = 1, kUsage = 2 };

struct Result {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// Runs one command. `args` excludes the program name. Never throws; all
/// output is captured in the result.
Result run(const std::vector<std::string>& args);

}  // namespace stokes::cli
