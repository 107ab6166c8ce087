#pragma once

#include <span>

#include "consensus/graph.hpp"

namespace consensus {

// Control parameters. `gamma` trades a gamma-times-longer consensus deadline
// for gamma-times-longer update intervals by scaling the input bound down to
// beta/gamma; gamma = 1 leaves the bound untouched.
struct ProtocolParams {
    double alpha = 0.0;  // consensus band half-width, state units
    double beta = 0.0;   // input magnitude bound, state units per second
    double gamma = 1.0;  // time-stretch factor, >= 1

    double beta_eff() const { return beta / gamma; }
    void validate() const;  // throws std::invalid_argument
};

// One planned inter-update interval: hold `control` for `duration` seconds.
struct UpdatePlan {
    double duration = 0.0;
    double control = 0.0;
};

// Sum of state differences between `agent` and its neighbors; equals row
// agent-1 of laplacian(g) * states.
double local_disagreement(std::span<const double> states, const Graph& g, int agent);

// Minimum consensus time achievable with continuous communication:
// (max(x0) - min(x0)) / (2 beta).
double t_star(std::span<const double> x0, double beta);

// Self-triggered update rule. Inside the band (|z| <= alpha) the interval is
// alpha/(beta_eff*degree) with the proportional control -(z/alpha)*beta_eff;
// outside it is (|z|+alpha)/(2*beta_eff*degree) with the saturated control
// -beta_eff*sign(z). The branch test is inclusive at |z| = alpha, where the
// two formulas coincide.
UpdatePlan plan_update(double z, int degree, const ProtocolParams& params);

// -beta * sign(z) with sign(0) = 0.
double time_optimal_control(double z, double beta);

}  // namespace consensus
