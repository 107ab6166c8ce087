#include "consensus/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace consensus {

namespace {

std::string agent_time_detail(int agent, double t, const std::string& what) {
    std::ostringstream out;
    out << "agent=" << agent << " time=" << t << " " << what;
    return out.str();
}

}  // namespace

DisagreementTrajectory disagreement_trajectory(const SimulationResult& result, int agent) {
    const Graph& g = result.graph;
    if (agent < 1 || agent > g.node_count()) {
        throw std::invalid_argument("disagreement_trajectory: agent index out of range");
    }
    const auto& own = result.trajectories[static_cast<std::size_t>(agent - 1)];
    std::vector<double> times = own.times;
    for (int j : g.neighbors(agent)) {
        const auto& other = result.trajectories[static_cast<std::size_t>(j - 1)].times;
        times.insert(times.end(), other.begin(), other.end());
    }
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    DisagreementTrajectory out;
    out.agent = agent;
    out.z.times = std::move(times);
    out.z.values.reserve(out.z.times.size());
    for (double t : out.z.times) {
        double z = 0.0;
        const double xi = result.state_at(agent, t);
        for (int j : g.neighbors(agent)) {
            z += xi - result.state_at(j, t);
        }
        out.z.values.push_back(z);
    }
    out.z.slopes.reserve(out.z.times.size() - 1);
    const int deg = g.degree(agent);
    for (std::size_t k = 0; k + 1 < out.z.times.size(); ++k) {
        const double t = out.z.times[k];
        double slope = deg * own.slopes[own.segment_index(t)];
        for (int j : g.neighbors(agent)) {
            const auto& other = result.trajectories[static_cast<std::size_t>(j - 1)];
            slope -= other.slopes[other.segment_index(t)];
        }
        out.z.slopes.push_back(slope);
    }
    return out;
}

ConsensusReport consensus_time(const SimulationResult& result) {
    const double level = result.params.alpha + 1e-9;
    const int n = result.graph.node_count();

    ConsensusReport report;
    report.bound = 2.0 * result.params.gamma * t_star(result.x0, result.params.beta);
    report.achieved = true;
    report.last_entry.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 1; i <= n; ++i) {
        const auto dz = disagreement_trajectory(result, i);
        const auto& t = dz.z.times;
        const auto& v = dz.z.values;
        double last = 0.0;
        for (std::size_t k = 0; k + 1 < t.size(); ++k) {
            if (std::abs(v[k + 1]) > level) {
                last = t[k + 1];
            } else if (std::abs(v[k]) > level) {
                const double target = v[k] > 0.0 ? level : -level;
                const double cross = t[k] + (target - v[k]) / (v[k + 1] - v[k]) * (t[k + 1] - t[k]);
                last = std::max(last, cross);
            }
        }
        if (std::abs(v.back()) > level) {
            report.achieved = false;
        }
        report.last_entry[static_cast<std::size_t>(i - 1)] = last;
        report.consensus_time = std::max(report.consensus_time, last);
    }
    report.satisfied = report.achieved && report.consensus_time <= report.bound + 1e-9;
    return report;
}

bool InvariantReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const InvariantCheck& c) { return c.passed; });
}

InvariantReport check_invariants(const SimulationResult& result) {
    InvariantReport report;
    const auto add = [&](std::string name, bool passed, std::string detail) {
        report.checks.push_back({std::move(name), passed, passed ? "-" : std::move(detail)});
    };
    const Graph& g = result.graph;
    const int n = g.node_count();
    const double bound = result.params.beta_eff();
    const double alpha = result.params.alpha;
    const double tol = 1e-9;

    std::vector<std::vector<const UpdateEvent*>> per_agent(static_cast<std::size_t>(n));
    for (const auto& ev : result.events) {
        per_agent[static_cast<std::size_t>(ev.agent - 1)].push_back(&ev);
    }

    {  // every agent updates at t=0 and spacing equals the planned durations
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= n && ok; ++i) {
            const auto& evs = per_agent[static_cast<std::size_t>(i - 1)];
            if (evs.empty() || evs.front()->time != 0.0) {
                ok = false;
                detail = agent_time_detail(i, 0.0, "missing initial update");
                break;
            }
            for (std::size_t k = 0; k + 1 < evs.size(); ++k) {
                const double gap = evs[k + 1]->time - evs[k]->time;
                if (std::abs(gap - evs[k]->plan.duration) >
                    1e-12 * std::max(1.0, evs[k + 1]->time)) {
                    ok = false;
                    detail = agent_time_detail(i, evs[k + 1]->time, "event spacing != planned duration");
                    break;
                }
            }
        }
        add("event_structure", ok, detail);
    }

    {  // states never leave [min x0, max x0]
        const auto [lo_it, hi_it] = std::minmax_element(result.x0.begin(), result.x0.end());
        const double lo = *lo_it - tol, hi = *hi_it + tol;
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= n && ok; ++i) {
            const auto& traj = result.trajectories[static_cast<std::size_t>(i - 1)];
            for (std::size_t k = 0; k < traj.values.size(); ++k) {
                if (traj.values[k] < lo || traj.values[k] > hi) {
                    ok = false;
                    detail = agent_time_detail(i, traj.times[k], "state outside initial hull");
                    break;
                }
            }
        }
        add("containment", ok, detail);
    }

    {  // |dx/dt| <= beta_eff on every segment
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= n && ok; ++i) {
            const auto& traj = result.trajectories[static_cast<std::size_t>(i - 1)];
            for (std::size_t k = 0; k < traj.slopes.size(); ++k) {
                if (std::abs(traj.slopes[k]) > bound + tol) {
                    ok = false;
                    detail = agent_time_detail(i, traj.times[k], "state slope exceeds input bound");
                    break;
                }
            }
        }
        add("slope_bound", ok, detail);
    }

    {  // stored values agree with slope integration
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= n && ok; ++i) {
            const auto& traj = result.trajectories[static_cast<std::size_t>(i - 1)];
            for (std::size_t k = 0; k + 1 < traj.times.size(); ++k) {
                const double predicted =
                    traj.values[k] + traj.slopes[k] * (traj.times[k + 1] - traj.times[k]);
                if (std::abs(predicted - traj.values[k + 1]) >
                    1e-12 * std::max(1.0, std::abs(traj.values[k + 1]))) {
                    ok = false;
                    detail = agent_time_detail(i, traj.times[k + 1], "trajectory discontinuity");
                    break;
                }
            }
        }
        add("value_continuity", ok, detail);
    }

    {  // broadcast reconstruction equals the true trajectory at every update
        bool ok = true;
        std::string detail;
        const std::span<const BroadcastRecord> log(result.broadcasts);
        for (const auto& ev : result.events) {
            for (int j : g.neighbors(ev.agent)) {
                const double rebuilt = reconstruct_neighbor_state(log, j, ev.time);
                if (std::abs(rebuilt - result.state_at(j, ev.time)) > 1e-12) {
                    ok = false;
                    detail = agent_time_detail(j, ev.time, "reconstructed neighbor state diverges");
                    break;
                }
            }
            if (!ok) break;
        }
        add("reconstruction", ok, detail);
    }

    {  // inside the band, the next update lands on the neighbor average
        bool ok = true;
        std::string detail;
        for (const auto& ev : result.events) {
            if (std::abs(ev.z) > alpha) continue;
            const double t_next = ev.time + ev.plan.duration;
            if (t_next > result.horizon) continue;
            double avg = 0.0;
            for (int j : g.neighbors(ev.agent)) {
                avg += result.state_at(j, ev.time);
            }
            avg /= g.degree(ev.agent);
            if (std::abs(result.state_at(ev.agent, t_next) - avg) > tol) {
                ok = false;
                detail = agent_time_detail(ev.agent, ev.time, "next state misses neighbor average");
                break;
            }
        }
        add("neighbor_averaging", ok, detail);
    }

    std::vector<DisagreementTrajectory> dz;
    dz.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        dz.push_back(disagreement_trajectory(result, i));
    }

    {  // z values agree with control-derived slopes
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= n && ok; ++i) {
            const auto& z = dz[static_cast<std::size_t>(i - 1)].z;
            for (std::size_t k = 0; k + 1 < z.times.size(); ++k) {
                const double predicted = z.values[k] + z.slopes[k] * (z.times[k + 1] - z.times[k]);
                if (std::abs(predicted - z.values[k + 1]) >
                    1e-12 * std::max(1.0, std::abs(z.values[k + 1]))) {
                    ok = false;
                    detail = agent_time_detail(i, z.times[k + 1], "disagreement inconsistent with controls");
                    break;
                }
            }
            for (std::size_t k = 0; k < z.slopes.size() && ok; ++k) {
                if (std::abs(z.slopes[k]) > 2.0 * bound * g.degree(i) + tol) {
                    ok = false;
                    detail = agent_time_detail(i, z.times[k], "disagreement slope exceeds 2*beta_eff*degree");
                }
            }
        }
        add("z_consistency", ok, detail);
    }

    {  // once inside the band, never out again
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= n && ok; ++i) {
            const auto& z = dz[static_cast<std::size_t>(i - 1)].z;
            // A planned interval may land z exactly on the band edge, which
            // floats as alpha +/- 1 ulp; entry and crossing tests carry the
            // same 1e-9 guard as the stay-inside test.
            bool entered = std::abs(z.values.front()) <= alpha + tol;
            for (std::size_t k = 0; k + 1 < z.times.size(); ++k) {
                const double v0 = z.values[k], v1 = z.values[k + 1];
                if (!entered) {
                    if ((v0 < -alpha - tol && v1 > alpha + tol) ||
                        (v0 > alpha + tol && v1 < -alpha - tol)) {
                        ok = false;
                        detail = agent_time_detail(i, z.times[k + 1], "crossed the band within one segment");
                        break;
                    }
                    entered = std::abs(v1) <= alpha + tol;
                } else if (std::abs(v1) > alpha + tol) {
                    ok = false;
                    detail = agent_time_detail(i, z.times[k + 1], "left the band after entry");
                    break;
                }
            }
        }
        add("absorption", ok, detail);
    }

    {  // outside the band, z moves monotonically back toward it
        bool ok = true;
        std::string detail;
        for (const auto& ev : result.events) {
            if (std::abs(ev.z) <= alpha) continue;
            const auto& z = dz[static_cast<std::size_t>(ev.agent - 1)].z;
            const double end = std::min(ev.time + ev.plan.duration, result.horizon);
            for (std::size_t k = z.segment_index(ev.time); k < z.slopes.size() && z.times[k] < end;
                 ++k) {
                const bool bad = ev.z < -alpha ? z.slopes[k] < -tol : z.slopes[k] > tol;
                if (bad) {
                    ok = false;
                    detail = agent_time_detail(ev.agent, z.times[k], "non-monotone approach to the band");
                    break;
                }
            }
            if (!ok) break;
        }
        add("band_monotonicity", ok, detail);
    }

    return report;
}

std::string to_text(const InvariantReport& report) {
    std::ostringstream out;
    for (const auto& check : report.checks) {
        out << "check=" << check.name << " status=" << (check.passed ? "pass" : "fail")
            << " detail=" << (check.detail.empty() ? "-" : check.detail) << "\n";
    }
    return out.str();
}

std::string to_text(const ConsensusReport& report) {
    std::ostringstream out;
    out << "check=consensus_time status=" << (report.satisfied ? "pass" : "fail") << " detail=";
    if (!report.achieved) {
        out << "not achieved within horizon";
    } else {
        out << "time=" << report.consensus_time << " bound=" << report.bound;
    }
    out << "\n";
    return out.str();
}

namespace {

std::vector<double> grid_levels(double rail, int count) {
    std::vector<double> levels(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        levels[static_cast<std::size_t>(k)] = -rail + 2.0 * rail * k / (count - 1);
    }
    return levels;
}

// Whether any adversary profile drives z out of the allowed set within
// duration d. The walk is checked at the piece boundaries only; z is linear
// in between, so the boundary extremes are the segment extremes. The escape
// flag is shared so every thread stops scanning once any profile violates;
// the result is an OR, independent of which thread finds a violator first.
bool any_profile_escapes(double z0, double ego_rate, const std::vector<double>& adversary,
                         int pieces, double d, double alpha, bool two_sided, bool parallel) {
    const double h = d / pieces;
    const int levels = static_cast<int>(adversary.size());
    std::int64_t total = 1;
    for (int p = 0; p < pieces; ++p) {
        total *= levels;
    }
    const double upper = alpha + 1e-12;
    const double lower = -alpha - 1e-12;

    std::atomic<int> escaped{0};
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t profile = 0; profile < total; ++profile) {
        if (escaped.load(std::memory_order_relaxed)) continue;
        double z = z0;
        std::int64_t rest = profile;
        bool out = false;
        for (int p = 0; p < pieces && !out; ++p) {
            const double w = adversary[static_cast<std::size_t>(rest % levels)];
            rest /= levels;
            z += (ego_rate - w) * h;
            out = z > upper || (two_sided && z < lower);
        }
        if (out) {
            escaped.store(1, std::memory_order_relaxed);
        }
    }
    return escaped.load() != 0;
}

double max_safe_duration(double z0, double ego_rate, const std::vector<double>& adversary,
                         int pieces, double hi, double alpha, bool two_sided, bool parallel) {
    if (!any_profile_escapes(z0, ego_rate, adversary, pieces, hi, alpha, two_sided, parallel)) {
        return hi;
    }
    double lo = 0.0;
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        if (any_profile_escapes(z0, ego_rate, adversary, pieces, mid, alpha, two_sided, parallel)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return lo;
}

double oracle_impl(double z0, int degree, const ProtocolParams& params, int pieces, int grid,
                   bool parallel) {
    params.validate();
    if (degree < 1) {
        throw std::invalid_argument("adversarial_duration_oracle: degree must be >= 1");
    }
    if (pieces < 1 || grid < 3) {
        throw std::invalid_argument("adversarial_duration_oracle: need pieces >= 1 and grid >= 3");
    }
    double profiles = 1.0;
    for (int p = 0; p < pieces; ++p) {
        profiles *= grid;
    }
    if (profiles > 1e9) {
        throw std::invalid_argument("adversarial_duration_oracle: discretization too large to enumerate");
    }

    const double bound = params.beta_eff();
    const double alpha = params.alpha;
    const double rail = degree * bound;
    const std::vector<double> adversary = grid_levels(rail, grid);
    const double hi = (std::abs(z0) + 2.0 * alpha) / rail + 1.0;

    if (std::abs(z0) <= alpha) {
        double best = 0.0;
        for (double u : grid_levels(bound, grid)) {
            best = std::max(best, max_safe_duration(z0, degree * u, adversary, pieces, hi, alpha,
                                                    /*two_sided=*/true, parallel));
        }
        return best;
    }
    // The two outside cases mirror each other; fold onto z0 < -alpha, ego
    // control saturated toward the band, and only the far edge constrained.
    const double start = z0 < 0.0 ? z0 : -z0;
    return max_safe_duration(start, rail, adversary, pieces, hi, alpha,
                             /*two_sided=*/false, parallel);
}

}  // namespace

double adversarial_duration_oracle(double z0, int degree, const ProtocolParams& params,
                                   int pieces, int grid) {
    return oracle_impl(z0, degree, params, pieces, grid, true);
}

double adversarial_duration_oracle_serial(double z0, int degree, const ProtocolParams& params,
                                          int pieces, int grid) {
    return oracle_impl(z0, degree, params, pieces, grid, false);
}

}  // namespace consensus
