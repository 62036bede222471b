#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bohrlab::cli {

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

/// Runs `bohrlab <command> [--flag value]...` with `args` excluding the program name.
/// JSON or CSV goes to `out`, diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bohrlab::cli
