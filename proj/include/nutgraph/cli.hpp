#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nutgraph {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs `nutgraph <args...>` (args excludes the program name). One JSON
/// document is written to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nutgraph
