#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tcorr::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // audit mismatch or invariant failure
inline constexpr int kInvalid = 2;  // bad parameters

/// Environment variable holding the default worker count.
inline constexpr const char* kWorkersEnv = "TCORR_WORKERS";

/// Runs one command line (args excludes the program name). Machine output
/// goes to `out` in one piece at the end; diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tcorr::cli
