#include "consensus/worstcase.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "consensus/engine.hpp"

namespace consensus {

int n_mu_r(double mu, int r) {
    if (!(mu > 0.0)) {
        throw std::invalid_argument("n_mu_r: mu must be positive");
    }
    if (r < 1) {
        throw std::invalid_argument("n_mu_r: r must be >= 1");
    }
    const double mu_half = mu / 2.0;
    const int n_mu1 = 1 + static_cast<int>(std::ceil(4.0 / mu_half));
    const int n_mu2 = static_cast<int>(std::ceil(5.0 / (mu - mu_half)));
    const int n_r1 = static_cast<int>(std::ceil(1.0 + 16.0 * r / (5.0 * r + 3.0)));
    const int n_r2 = 3 * r - 7;
    return std::max({8, n_mu1, n_mu2, n_r1, n_r2}) + 1;
}

WorstCaseInstance build_instance(double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 5.0)) {
        throw std::invalid_argument("build_instance: epsilon must lie in (0, 5)");
    }
    const double alpha = 3.0;
    const double mu_hat = epsilon / 2.0;
    const int r_hat = std::max(static_cast<int>(std::ceil(2.0 * alpha / epsilon)),
                               static_cast<int>(std::ceil(alpha / (5.0 - epsilon))));
    const int n = n_mu_r(mu_hat, r_hat);

    std::vector<double> x0(static_cast<std::size_t>(n), 5.0);
    x0[0] = 0.0;
    return WorstCaseInstance{epsilon,
                             r_hat,
                             n,
                             worst_case_graph(n, r_hat),
                             std::move(x0),
                             ProtocolParams{alpha, 1.0, 1.0},
                             5.0 - epsilon,
                             5.0};
}

TightnessResult verify_tightness(const WorstCaseInstance& instance) {
    const double horizon = 5.5;  // nominal upper edge plus slack for the detector
    const SimulationResult result = run(instance.graph, instance.x0, instance.params, horizon);
    TightnessResult out;
    out.report = consensus_time(result);
    out.measured = out.report.consensus_time;
    out.within = out.report.achieved && out.measured >= instance.expected_lower &&
                 out.measured <= instance.expected_upper + 1e-6;
    return out;
}

}  // namespace consensus
