#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace egk::cli {

enum ExitCode : int { kOk = 0, kViolations = 1, kInputError = 2 };

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace egk::cli
