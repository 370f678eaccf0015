#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nlmc::cli {

/// Runs one command line (args excludes the program name) and returns the
/// process exit code: 0 ok, 2 invalid input, 3 budget exceeded, 4 I/O or
/// parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlmc::cli
