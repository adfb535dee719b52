#ifndef TAUBERIAN_TOOLS_CLI_H_
#define TAUBERIAN_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace tauberian::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line `args` (args[0] is the program name). Regular output
// goes to `out`, diagnostics and logs to `err`. Returns the exit code.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tauberian::cli

#endif  // TAUBERIAN_TOOLS_CLI_H_
