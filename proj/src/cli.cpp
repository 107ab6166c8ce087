#include "consensus/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "consensus/analysis.hpp"
#include "consensus/config.hpp"
#include "consensus/csv.hpp"
#include "consensus/engine.hpp"
#include "consensus/worstcase.hpp"

namespace consensus::cli {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void print_costs(std::ostream& out, const CommunicationCost& cost) {
    out << "costs=";
    for (std::size_t i = 0; i < cost.per_agent.size(); ++i) {
        out << (i ? "," : "") << cost.per_agent[i];
    }
    out << "\n";
    out << "C_MAS=" << cost.aggregate << "\n";
}

}  // namespace

int cmd_run(const std::string& config_path, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    double horizon = 0.0;
    ProtocolParams params;
    try {
        cfg = load_run_config(config_path);
        const Graph g = resolve_graph(cfg.graph);
        validate_run_config(cfg, g);
        params = ProtocolParams{cfg.alpha, cfg.beta, cfg.gamma};
        horizon = resolve_horizon(cfg);

        SimulationResult result = run(g, cfg.x0, params, horizon);
        const ConsensusReport report = consensus_time(result);
        const CommunicationCost cost = communication_cost(result, horizon);

        out << "agents=" << g.node_count() << "\n";
        out << "horizon=" << num(horizon) << "\n";
        out << "consensus_time="
            << (report.achieved ? num(report.consensus_time) : std::string("not_achieved")) << "\n";
        print_costs(out, cost);
        out << "bound_2gT=" << num(report.bound) << "\n";
        out << "bound_satisfied=" << (report.satisfied ? "true" : "false") << "\n";

        if (!cfg.trajectories_csv.empty()) {
            std::ofstream csv(cfg.trajectories_csv);
            if (!csv) {
                err << "cannot write " << cfg.trajectories_csv << "\n";
                return kExitRejected;
            }
            write_trajectories_csv(csv, result);
        }
        if (!cfg.events_csv.empty()) {
            std::ofstream csv(cfg.events_csv);
            if (!csv) {
                err << "cannot write " << cfg.events_csv << "\n";
                return kExitRejected;
            }
            write_events_csv(csv, result);
        }
        return kExitOk;
    } catch (const ConfigError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitRejected;
    }
}

int cmd_table(double alpha, std::ostream& out, std::ostream& err) {
    const Graph g = resolve_graph("fig6");
    const std::vector<double> x0{7, 2, 4, 3, 1, 5};
    const std::vector<long> expected_costs{8, 9, 30, 30, 9, 9};
    constexpr long kExpectedAggregate = 95;
    const double gammas[] = {1.0, 5.0, 10.0};
    const char* labels[] = {"2T*", "10T*", "20T*"};
    const double expected_times[] = {2.26, 11.3, 22.6};
    const double time_tolerances[] = {0.01, 0.05, 0.1};

    out << "T      time      C_1  C_2  C_3  C_4  C_5  C_6  C_MAS\n";
    std::ostringstream diff;
    try {
        for (int row = 0; row < 3; ++row) {
            const ProtocolParams params{alpha, 1.0, gammas[row]};
            const double horizon = 2.0 * gammas[row] * t_star(x0, params.beta);
            const SimulationResult result = run(g, x0, params, horizon);
            const ConsensusReport report = consensus_time(result);
            const CommunicationCost cost = communication_cost(result, horizon);

            char line[160];
            std::snprintf(line, sizeof line, "%-6s %-9.4f %-4ld %-4ld %-4ld %-4ld %-4ld %-4ld %ld\n",
                          labels[row], report.consensus_time, cost.per_agent[0], cost.per_agent[1],
                          cost.per_agent[2], cost.per_agent[3], cost.per_agent[4], cost.per_agent[5],
                          cost.aggregate);
            out << line;

            for (std::size_t i = 0; i < expected_costs.size(); ++i) {
                if (cost.per_agent[i] != expected_costs[i]) {
                    diff << "row " << labels[row] << ": C_" << i + 1 << "=" << cost.per_agent[i]
                         << " expected " << expected_costs[i] << "\n";
                }
            }
            if (cost.aggregate != kExpectedAggregate) {
                diff << "row " << labels[row] << ": C_MAS=" << cost.aggregate << " expected "
                     << kExpectedAggregate << "\n";
            }
            if (!report.achieved ||
                std::abs(report.consensus_time - expected_times[row]) > time_tolerances[row]) {
                diff << "row " << labels[row] << ": time=" << num(report.consensus_time)
                     << " expected " << expected_times[row] << " +/- " << time_tolerances[row]
                     << "\n";
            }
        }
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitRejected;
    }
    const std::string mismatch = diff.str();
    if (!mismatch.empty()) {
        err << "table mismatch:\n" << mismatch;
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
    if (options.count < 1 || options.max_n < 2) {
        err << "verify: need count >= 1 and max-n >= 2\n";
        return kExitUsage;
    }
    try {
        const VerifyReport report = run_verification(options);
        out << report.text;
        out << "instances=" << options.count << " failures=" << report.failures << "\n";
        if (!report.all_ok) {
            err << "first failing instance reproducer:\n" << report.reproducer;
            return kExitMismatch;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitRejected;
    }
}

int cmd_worstcase(double epsilon, std::ostream& out, std::ostream& err) {
    if (!(epsilon > 0.0) || !(epsilon < 5.0)) {
        err << "worstcase: epsilon must lie in (0, 5)\n";
        return kExitUsage;
    }
    try {
        const WorstCaseInstance instance = build_instance(epsilon);
        const TightnessResult tightness = verify_tightness(instance);
        out << "epsilon=" << num(epsilon) << "\n";
        out << "r=" << instance.r << "\n";
        out << "n=" << instance.n << "\n";
        out << "t_star=" << num(t_star(instance.x0, instance.params.beta)) << "\n";
        out << "bracket=[" << num(instance.expected_lower) << "," << num(instance.expected_upper)
            << "]\n";
        out << "measured=" << num(tightness.measured) << "\n";
        out << "within=" << (tightness.within ? "true" : "false") << "\n";
        return tightness.within ? kExitOk : kExitMismatch;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitRejected;
    }
}

}  // namespace consensus::cli
