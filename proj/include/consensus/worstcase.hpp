#pragma once

#include <vector>

#include "consensus/analysis.hpp"
#include "consensus/graph.hpp"
#include "consensus/protocol.hpp"

namespace consensus {

// Closed-form size for the hub-plus-clique family at the 0/5 initial levels
// with alpha = 3 and beta = 1: max{8, n_mu1, n_mu2, n_r1, n_r2} + 1, where
// mu~ = mu/2, n_mu1 = 1 + ceil(4/mu~), n_mu2 = ceil(5/(mu - mu~)),
// n_r1 = ceil(1 + 16r/(5r+3)) and n_r2 = 3r - 7. The one non-integer term is
// rounded up before the max, which preserves every inequality it feeds.
int n_mu_r(double mu, int r);

// One sized instance of the slow-convergence family with its nominal
// consensus-time bracket [5 - epsilon, 5].
struct WorstCaseInstance {
    double epsilon = 0.0;
    int r = 0;
    int n = 0;
    Graph graph;
    std::vector<double> x0;  // hub at 0, everyone else at 5
    ProtocolParams params;   // alpha = 3, beta = 1, gamma = 1
    double expected_lower = 0.0;
    double expected_upper = 0.0;
};

// Requires 0 < epsilon < 5. Uses mu^ = epsilon/2 and
// r^ = max(ceil(2*alpha/epsilon), ceil(alpha/(5-epsilon))).
WorstCaseInstance build_instance(double epsilon);

struct TightnessResult {
    bool within = false;   // measured time inside [expected_lower, expected_upper + 1e-6]
    double measured = 0.0;
    ConsensusReport report;
};

// Runs the instance to horizon 5.5 and compares the measured consensus time
// against the nominal bracket. Note: the smallest instances the sizing
// formula emits undershoot the lower edge (the family reaches the bracket
// only at larger n); the comparison is reported as measured.
TightnessResult verify_tightness(const WorstCaseInstance& instance);

}  // namespace consensus
