#ifndef QSERIES_CLI_CLI_HPP
#define QSERIES_CLI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qseries::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qseries::cli

#endif  // QSERIES_CLI_CLI_HPP
