#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skinning {

// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitIoError = 3;

// Runs one CLI invocation. args excludes the program name. Data is written to
// out; diagnostics, skip logs and the version banner go to err. Sweep cells
// are evaluated in parallel (capped by SKINNING_BOUNDS_THREADS) but output is
// byte-deterministic regardless of thread count.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skinning
