#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace owp {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // invalid document / search exhausted
inline constexpr int kUsage = 2;
inline constexpr int kUnsupported = 3;
inline constexpr int kTimedOut = 4;
}  // namespace exit_code

/// Runs the `owp` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace owp
