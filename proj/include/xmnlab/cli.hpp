#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace xmnlab {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitViolation = 2 };

// Runs the xmnlab command line. args[0] is the program name.
// Reports go to `out` (or --out), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "a..b" (inclusive) or a single "a"; throws std::invalid_argument.
std::pair<unsigned, unsigned> parse_m_range(const std::string& text);

}  // namespace xmnlab
