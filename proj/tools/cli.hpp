#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starprof::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitGuard = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (without the program name) and dispatches one subcommand.
/// Returns 0 on success, 1 on a domain/guard error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starprof::cli
