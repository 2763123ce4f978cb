#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crystals::cli {

// Runs the command line given by args (program name excluded), reading piped
// input from `in` and writing results to `out`, diagnostics to `err`.
// Exit status: 0 success; 1 usage or input errors; 2 when a verification
// finds a mismatch or a set that is not closed under the operators.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace crystals::cli
