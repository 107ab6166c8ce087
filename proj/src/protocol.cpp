#include "consensus/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace consensus {

void ProtocolParams::validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("ProtocolParams: alpha must be positive");
    }
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw std::invalid_argument("ProtocolParams: beta must be positive");
    }
    if (!(gamma >= 1.0) || !std::isfinite(gamma)) {
        throw std::invalid_argument("ProtocolParams: gamma must be >= 1");
    }
}

double local_disagreement(std::span<const double> states, const Graph& g, int agent) {
    if (states.size() != static_cast<std::size_t>(g.node_count())) {
        throw std::invalid_argument("local_disagreement: state vector length mismatch");
    }
    const double xi = states[static_cast<std::size_t>(agent - 1)];
    double z = 0.0;
    for (int j : g.neighbors(agent)) {
        z += xi - states[static_cast<std::size_t>(j - 1)];
    }
    return z;
}

double t_star(std::span<const double> x0, double beta) {
    if (x0.empty()) {
        throw std::invalid_argument("t_star: empty state vector");
    }
    const auto [lo, hi] = std::minmax_element(x0.begin(), x0.end());
    return (*hi - *lo) / (2.0 * beta);
}

UpdatePlan plan_update(double z, int degree, const ProtocolParams& params) {
    params.validate();
    if (degree < 1) {
        throw std::invalid_argument("plan_update: degree must be >= 1");
    }
    const double bound = params.beta_eff();
    if (std::abs(z) <= params.alpha) {
        return {params.alpha / (bound * degree), -(z / params.alpha) * bound};
    }
    return {(std::abs(z) + params.alpha) / (2.0 * bound * degree), z > 0.0 ? -bound : bound};
}

double time_optimal_control(double z, double beta) {
    if (z > 0.0) return -beta;
    if (z < 0.0) return beta;
    return 0.0;
}

}  // namespace consensus
