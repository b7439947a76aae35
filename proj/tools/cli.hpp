#ifndef HOPDOM_TOOLS_CLI_HPP
#define HOPDOM_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hopdom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;  // invalid set, infeasible, or mismatch
inline constexpr int kExitUsage = 2;    // bad flags or unreadable input

// Runs one invocation. `args` excludes the program name. Machine-readable
// results go to `out`, diagnostics and timings to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopdom::cli

#endif  // HOPDOM_TOOLS_CLI_HPP
