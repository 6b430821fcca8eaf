#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ouroboros::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Never throws on user input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

}  // namespace ouroboros::cli
