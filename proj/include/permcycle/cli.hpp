#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permcycle {

// Parses and runs one command line (argv without the program name), writing
// results to `out` and diagnostics to `err`.  Returns the process exit code:
// 0 success, 1 computation or acceptance failure, 2 usage error.
//
// Identical argument vectors (plus an identical PERMCYCLE_PRECISION_BITS
// environment) produce byte-identical output; wall-clock fields only appear
// under --timings.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace permcycle
