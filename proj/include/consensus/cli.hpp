#pragma once

#include <iosfwd>
#include <string>

#include "consensus/verify.hpp"

namespace consensus::cli {

// Exit codes shared by every subcommand: 0 success, 2 usage or config error,
// 3 simulation rejection, 4 acceptance mismatch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRejected = 3;
inline constexpr int kExitMismatch = 4;

int cmd_run(const std::string& config_path, std::ostream& out, std::ostream& err);

// Runs gamma in {1, 5, 10} on the bundled six-node configuration and renders
// the consensus-time/cost table; exits kExitMismatch when any cost cell or
// time strays from the pinned reference values. `alpha` defaults to 0.6 and
// exists so the gate itself can be exercised with a doctored value.
int cmd_table(double alpha, std::ostream& out, std::ostream& err);

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

int cmd_worstcase(double epsilon, std::ostream& out, std::ostream& err);

}  // namespace consensus::cli
