#pragma once

#include <iosfwd>

#include "consensus/engine.hpp"

namespace consensus {

// `time,agent,x,z`: one row per disagreement breakpoint per agent, agents in
// ascending order. All numbers carry 12 significant digits.
void write_trajectories_csv(std::ostream& out, const SimulationResult& result);

// `agent,k,time,z,control,duration`: executed updates in execution order;
// k is the 1-based per-agent update index.
void write_events_csv(std::ostream& out, const SimulationResult& result);

}  // namespace consensus
