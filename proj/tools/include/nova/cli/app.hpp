#pragma once

namespace nova::cli {

// Parses the command line, runs one subcommand and returns its exit code:
// 0 pass, 1 nonzero residual or failed precondition, 2 input error.
int run(int argc, const char* const* argv);

}  // namespace nova::cli
