#include "consensus/engine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>

namespace consensus {

std::size_t PiecewiseLinearTrajectory::segment_index(double t) const {
    const auto it = std::upper_bound(times.begin(), times.end(), t);
    const auto k = static_cast<std::size_t>(it - times.begin());
    if (k == 0) {
        throw std::out_of_range("trajectory evaluated before its first breakpoint");
    }
    return std::min(k - 1, slopes.size() - 1);
}

double PiecewiseLinearTrajectory::value_at(double t) const {
    if (times.empty() || t < times.front() || t > times.back()) {
        throw std::out_of_range("trajectory evaluated outside its time range");
    }
    if (t == times.back()) {
        return values.back();
    }
    const std::size_t k = segment_index(t);
    return values[k] + slopes[k] * (t - times[k]);
}

double SimulationResult::state_at(int agent, double t) const {
    if (agent < 1 || agent > graph.node_count()) {
        throw std::invalid_argument("state_at: agent index out of range");
    }
    return trajectories[static_cast<std::size_t>(agent - 1)].value_at(t);
}

SimulationResult run(const Graph& g, const std::vector<double>& x0,
                     const ProtocolParams& params, double horizon) {
    params.validate();
    const int n = g.node_count();
    if (n < 2) {
        throw std::invalid_argument("run: need at least two agents");
    }
    if (static_cast<int>(x0.size()) != n) {
        throw std::invalid_argument("run: x0 length must equal the agent count");
    }
    for (double v : x0) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("run: x0 entries must be finite");
        }
    }
    if (!g.is_connected()) {
        throw std::invalid_argument("run: communication graph must be connected");
    }
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw std::invalid_argument("run: horizon must be positive and finite");
    }

    SimulationResult result{g, x0, params, horizon, {}, {}, {}};
    result.trajectories.assign(static_cast<std::size_t>(n), {});

    // Open segment per agent: state seg_value at seg_time, moving with seg_slope.
    std::vector<double> seg_time(static_cast<std::size_t>(n), 0.0);
    std::vector<double> seg_value(x0.begin(), x0.end());
    std::vector<double> seg_slope(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        result.trajectories[i].times.push_back(0.0);
        result.trajectories[i].values.push_back(x0[i]);
    }
    const auto state_now = [&](int idx, double t) {
        return seg_value[idx] + seg_slope[idx] * (t - seg_time[idx]);
    };

    using Pending = std::pair<double, int>;  // (time, agent), agent breaks ties
    std::priority_queue<Pending, std::vector<Pending>, std::greater<>> queue;
    for (int i = 1; i <= n; ++i) {
        queue.emplace(0.0, i);
    }

    // Accumulated event times approximate their exact values to a few ulp, so
    // an instant that lands exactly on the horizon in exact arithmetic may
    // float to either side of it; the relative guard keeps it excluded.
    const double cutoff = horizon * (1.0 - 1e-12);
    while (!queue.empty()) {
        const auto [t, agent] = queue.top();
        queue.pop();
        if (t >= cutoff) {
            continue;
        }
        const int idx = agent - 1;
        const double xi = state_now(idx, t);
        double z = 0.0;
        for (int j : g.neighbors(agent)) {
            z += xi - state_now(j - 1, t);
        }
        const UpdatePlan plan = plan_update(z, g.degree(agent), params);
        if (!(plan.duration > 0.0)) {
            throw std::logic_error("run: planned duration must be positive");
        }

        auto& traj = result.trajectories[idx];
        if (t > traj.times.back()) {
            traj.times.push_back(t);
            traj.values.push_back(xi);
            traj.slopes.push_back(seg_slope[idx]);
        }
        seg_time[idx] = t;
        seg_value[idx] = xi;
        seg_slope[idx] = plan.control;

        result.events.push_back({t, agent, z, plan});
        result.broadcasts.push_back({agent, t, xi, plan.control});
        queue.emplace(t + plan.duration, agent);
    }

    for (int i = 0; i < n; ++i) {
        auto& traj = result.trajectories[i];
        traj.values.push_back(state_now(i, horizon));
        traj.times.push_back(horizon);
        traj.slopes.push_back(seg_slope[i]);
    }
    return result;
}

double reconstruct_neighbor_state(std::span<const BroadcastRecord> log, int agent, double t) {
    auto it = std::upper_bound(log.begin(), log.end(), t,
                               [](double v, const BroadcastRecord& rec) { return v < rec.time; });
    while (it != log.begin()) {
        --it;
        if (it->agent == agent) {
            return it->state + it->control * (t - it->time);
        }
    }
    throw std::invalid_argument("reconstruct_neighbor_state: no broadcast of the agent at or before t");
}

CommunicationCost communication_cost(const SimulationResult& result, double window_end) {
    if (window_end < 0.0 || window_end > result.horizon) {
        throw std::invalid_argument("communication_cost: window must lie within [0, horizon]");
    }
    const double cut = window_end * (1.0 - 1e-12);
    CommunicationCost cost;
    cost.per_agent.assign(static_cast<std::size_t>(result.graph.node_count()), 0);
    for (const auto& ev : result.events) {
        if (ev.time < cut) {
            ++cost.per_agent[static_cast<std::size_t>(ev.agent - 1)];
        }
    }
    for (long c : cost.per_agent) {
        cost.aggregate += c;
    }
    return cost;
}

}  // namespace consensus
