#pragma once

#include <ostream>

namespace orlapprox::cli {

/// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kConfigError = 2;
inline constexpr int kSolverFailure = 3;

/// Parses argv, runs one subcommand and returns its exit code. The report
/// goes to `out`; usage and error text to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orlapprox::cli
