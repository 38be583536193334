#pragma once

#include <string>
#include <vector>

namespace starprof::cli {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::skip;
    std::string detail;
};

inline constexpr int kMaxVerifyN = 12;

/// Runs every identity check that is feasible at deck size n (2 <= n <= 12).
/// Checks whose size guard excludes n are reported as skipped.
std::vector<CheckResult> verify_suite(int n);

std::string_view to_string(CheckStatus status) noexcept;

}  // namespace starprof::cli
