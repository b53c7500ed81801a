#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace squaretile {

/// Runs one command line (without the program name). Returns the process exit
/// code: 0 success or dense, 1 internal invariant violation, 2 input error,
/// 3 inconclusive density.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace squaretile
