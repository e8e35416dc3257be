#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphreal::cli {

/// Exit codes: 0 success or graphical, 1 not graphical, 2 invalid input.
enum ExitCode : int { kOk = 0, kNotGraphical = 1, kInvalidInput = 2 };

/// Runs the command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace graphreal::cli
