#pragma once

#include <span>
#include <vector>

#include "consensus/graph.hpp"
#include "consensus/protocol.hpp"

namespace consensus {

// One broadcast: the state and the control an agent announced at one of its
// update instants. This log is the complete information a neighbor may use.
struct BroadcastRecord {
    int agent = 0;
    double time = 0.0;
    double state = 0.0;
    double control = 0.0;
};

// Exact piecewise-linear state history. values[k] is the state at times[k]
// and slopes[k] is the constant derivative on [times[k], times[k+1]). The
// first breakpoint is 0 and the last is the simulation horizon.
struct PiecewiseLinearTrajectory {
    std::vector<double> times;
    std::vector<double> values;
    std::vector<double> slopes;

    // Exact evaluation; throws std::out_of_range outside [times.front(), times.back()].
    double value_at(double t) const;

    // Index of the segment whose half-open interval contains t (the last
    // segment also owns its right endpoint).
    std::size_t segment_index(double t) const;
};

struct UpdateEvent {
    double time = 0.0;
    int agent = 0;
    double z = 0.0;  // local disagreement the plan was computed from
    UpdatePlan plan;
};

struct SimulationResult {
    Graph graph;
    std::vector<double> x0;
    ProtocolParams params;
    double horizon = 0.0;
    std::vector<PiecewiseLinearTrajectory> trajectories;  // indexed by agent-1
    std::vector<UpdateEvent> events;                      // execution order
    std::vector<BroadcastRecord> broadcasts;              // execution order

    double state_at(int agent, double t) const;
};

// Deterministic discrete-event execution of the update protocol. All agents
// update at t = 0; thereafter the earliest pending update runs first, ties
// broken by ascending agent index. Events at or beyond the horizon are not
// executed; trajectories are closed out exactly at the horizon. Identical
// inputs produce bit-identical results.
//
// Rejects disconnected graphs, fewer than two agents, length-mismatched or
// non-finite x0, and non-positive horizons.
SimulationResult run(const Graph& g, const std::vector<double>& x0,
                     const ProtocolParams& params, double horizon);

// State of `agent` at time t as reconstructed from its latest broadcast at or
// before t. Exact, because controls are constant between broadcasts.
double reconstruct_neighbor_state(std::span<const BroadcastRecord> log, int agent, double t);

struct CommunicationCost {
    std::vector<long> per_agent;  // indexed by agent-1
    long aggregate = 0;
};

// Executed update instants per agent in the half-open window [0, window_end).
// Event times are accumulated sums, so an instant that falls exactly on the
// window edge in exact arithmetic may sit within a few ulp of it here; a
// relative guard of 1e-12 keeps such instants excluded.
CommunicationCost communication_cost(const SimulationResult& result, double window_end);

}  // namespace consensus
