#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gainarr {

enum ExitCode : int { ExitPass = 0, ExitVerification = 1, ExitUsage = 2, ExitBound = 3 };

/// Runs the command-line tool: chi, free, signed-check, free3, family and
/// verify. JSON goes to `out`, diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gainarr
