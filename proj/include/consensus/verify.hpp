#pragma once

#include <cstdint>
#include <string>

namespace consensus {

struct VerifyOptions {
    int count = 100;
    int max_n = 10;
    std::uint64_t seed = 0;
    bool parallel = true;
};

struct VerifyReport {
    bool all_ok = false;
    int failures = 0;
    std::string text;        // one line per instance, in instance order
    std::string reproducer;  // runnable config for the first failing instance
};

// Property sweep over random connected instances: n in [2, max_n], x0 in
// [-10, 10]^n, gamma in {1, 2, 5}, alpha in [0.1, 2], beta = 1. Each instance
// runs to just past 2*gamma*t_star and must pass the invariant suite with
// consensus time within the bound. Deterministic for a fixed seed; instances
// may execute in parallel but the report is assembled in index order.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace consensus
