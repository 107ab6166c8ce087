#include "consensus/csv.hpp"

#include <cstdio>
#include <ostream>
#include <vector>

#include "consensus/analysis.hpp"

namespace consensus {

namespace {

const char* fmt(char (&buf)[40], double v) {
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

void write_trajectories_csv(std::ostream& out, const SimulationResult& result) {
    out << "time,agent,x,z\n";
    char buf[40];
    for (int agent = 1; agent <= result.graph.node_count(); ++agent) {
        const auto dz = disagreement_trajectory(result, agent);
        for (std::size_t k = 0; k < dz.z.times.size(); ++k) {
            const double t = dz.z.times[k];
            out << fmt(buf, t) << "," << agent;
            out << "," << fmt(buf, result.state_at(agent, t));
            out << "," << fmt(buf, dz.z.values[k]) << "\n";
        }
    }
}

void write_events_csv(std::ostream& out, const SimulationResult& result) {
    out << "agent,k,time,z,control,duration\n";
    std::vector<long> index(static_cast<std::size_t>(result.graph.node_count()), 0);
    char buf[40];
    for (const auto& ev : result.events) {
        out << ev.agent << "," << ++index[static_cast<std::size_t>(ev.agent - 1)];
        out << "," << fmt(buf, ev.time);
        out << "," << fmt(buf, ev.z);
        out << "," << fmt(buf, ev.plan.control);
        out << "," << fmt(buf, ev.plan.duration) << "\n";
    }
}

}  // namespace consensus
