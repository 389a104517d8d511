#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gmid::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

/// Runs one command line (args excludes the program name). Primary output
/// goes to --out when given, otherwise to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmid::cli
