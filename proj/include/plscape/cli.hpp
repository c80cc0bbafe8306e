#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plscape::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kPreconditionViolated = 2,
  kIoError = 3,
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plscape::cli
