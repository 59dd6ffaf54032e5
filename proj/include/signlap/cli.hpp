#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace signlap {

/// Runs the command line (args excludes the program name). Returns the exit
/// code: 0 success, 1 bad input, 2 internal-consistency fault.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace signlap
