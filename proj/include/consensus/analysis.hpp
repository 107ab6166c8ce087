#pragma once

#include <string>
#include <vector>

#include "consensus/engine.hpp"

namespace consensus {

// Exact piecewise-linear local disagreement of one agent over [0, horizon],
// built on the merged breakpoints of its own and its neighbors' trajectories.
// Values come from direct state evaluation; slopes from the active controls.
struct DisagreementTrajectory {
    int agent = 0;
    PiecewiseLinearTrajectory z;
};

DisagreementTrajectory disagreement_trajectory(const SimulationResult& result, int agent);

struct ConsensusReport {
    bool achieved = false;       // every |z_i| is inside the band at the horizon
    double consensus_time = 0.0; // last instant any |z_i| exceeded alpha (+guard)
    std::vector<double> last_entry;  // per agent, indexed by agent-1
    double bound = 0.0;          // 2 * gamma * t_star(x0, beta)
    bool satisfied = false;      // achieved and consensus_time <= bound + 1e-9
};

// Last-entry detector. An agent's last entry is the supremum of times where
// |z_i| > alpha + 1e-9, with boundary crossings located by linear
// interpolation; the report's consensus time is the maximum across agents.
ConsensusReport consensus_time(const SimulationResult& result);

struct InvariantCheck {
    std::string name;
    bool passed = true;
    std::string detail;  // first counterexample (agent, time) on failure
};

struct InvariantReport {
    std::vector<InvariantCheck> checks;
    bool all_passed() const;
};

// Runs the full suite: event structure, containment, slope bounds, trajectory
// continuity, disagreement consistency, broadcast-reconstruction exactness,
// neighbor averaging, absorption, and outside-band monotonicity.
InvariantReport check_invariants(const SimulationResult& result);

// One line per check: `check=<name> status=<pass|fail> detail=<...>`.
std::string to_text(const InvariantReport& report);
std::string to_text(const ConsensusReport& report);

// Brute-force max-min estimate of the longest safe inter-update duration for
// an agent of the given degree observing disagreement z0. The adversary plays
// the aggregate neighbor input as a piecewise-constant signal on `pieces`
// equal subintervals, each level drawn from a `grid`-point discretization of
// [-degree*beta_eff, +degree*beta_eff]. Inside the band the ego control is
// additionally searched over a `grid`-point discretization of
// [-beta_eff, +beta_eff]; outside it is pinned to the saturated rule. The
// returned duration is bisected to 1e-6 and converges to the closed forms of
// plan_update as the discretization refines.
double adversarial_duration_oracle(double z0, int degree, const ProtocolParams& params,
                                   int pieces, int grid);

// Serial reference implementation; bit-identical to the parallel kernel.
double adversarial_duration_oracle_serial(double z0, int degree, const ProtocolParams& params,
                                          int pieces, int grid);

}  // namespace consensus
