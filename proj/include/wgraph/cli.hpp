#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wgraph::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes: 0 success, 2 counterexample found, 1 usage or I/O error.
enum ExitCode { kOk = 0, kError = 1, kCounterexample = 2 };

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wgraph::cli
