#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radonfd::cli {

/// Runs the command line `args` (without the program name). Exit codes:
/// 0 success, 1 inequality violation, 2 input error, 3 non-convergence.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radonfd::cli
