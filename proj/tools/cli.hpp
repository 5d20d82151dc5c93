#ifndef GLIK_TOOLS_CLI_HPP
#define GLIK_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace glik::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitLimit = 3;
inline constexpr int kExitDataError = 65;

/// Runs one invocation; `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace glik::cli

#endif // GLIK_TOOLS_CLI_HPP
