#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace relcat::cli {

// Runs the relcat command line on the given arguments (without the program
// name), writing to the given streams. Returns the process exit code:
// 0 success (holds / equal / partitions agree), 1 for a negative verdict,
// 2 for usage, parse, type or fragment errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relcat::cli
