#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bu::cli {

/// Runs the command line; returns the exit status (0 ok, 1 verification failure, 2 input error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bu::cli
