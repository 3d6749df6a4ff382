#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simrouge {

enum ExitCode { kExitOk = 0, kExitInput = 1, kExitConfig = 2 };

// Runs one command line (without the program name). Output is written only
// when the command succeeds; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "0.5:1.0:0.1" (inclusive range) or "0.3,0.5,0.7". Sorted ascending.
std::vector<double> parse_thresholds(const std::string& spec);

}  // namespace simrouge
