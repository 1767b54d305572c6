#pragma once

#include <iosfwd>

namespace fiberkit::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kNumerical = 2;
inline constexpr int kUsage = 64;

/// Entry point of the `fiberkit` tool; writes reports to out and
/// diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fiberkit::cli
