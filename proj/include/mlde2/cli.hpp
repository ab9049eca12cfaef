#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mlde2 {

// Runs the command line surface; returns the process exit status.
// Subcommands: forms, mlde, character, classify, smatrix, tables.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mlde2
