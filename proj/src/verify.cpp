#include "consensus/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "consensus/analysis.hpp"
#include "consensus/config.hpp"
#include "consensus/engine.hpp"
#include "consensus/random_graph.hpp"

namespace consensus {

namespace {

struct InstanceOutcome {
    bool ok = true;
    std::string line;
    std::string reproducer;
};

InstanceOutcome check_instance(const VerifyOptions& options, int index) {
    Rng rng(mix_seed(options.seed, static_cast<std::uint64_t>(index)));
    const int n = rng.uniform_int(2, options.max_n);
    const Graph g = random_connected_graph(n, rng);
    std::vector<double> x0;
    x0.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        x0.push_back(rng.uniform(-10.0, 10.0));
    }
    const int gammas[] = {1, 2, 5};
    const double gamma = gammas[rng.uniform_int(0, 2)];
    const double alpha = rng.uniform(0.1, 2.0);
    const ProtocolParams params{alpha, 1.0, gamma};

    const double bound = 2.0 * gamma * t_star(x0, params.beta);
    const double horizon = std::max(bound * 1.000001 + 0.05, 0.1);
    const SimulationResult result = run(g, x0, params, horizon);
    const InvariantReport invariants = check_invariants(result);
    const ConsensusReport consensus = consensus_time(result);

    InstanceOutcome out;
    out.ok = invariants.all_passed() && consensus.satisfied;
    std::ostringstream line;
    line << "instance=" << index << " n=" << n << " edges=" << g.edge_count()
         << " gamma=" << gamma << " alpha=" << alpha
         << " consensus_time=" << consensus.consensus_time << " bound=" << consensus.bound
         << " status=" << (out.ok ? "ok" : "FAIL");
    out.line = line.str();
    if (!out.ok) {
        RunConfig cfg;
        cfg.graph = graph_to_spec(g);
        cfg.x0 = x0;
        cfg.alpha = alpha;
        cfg.beta = params.beta;
        cfg.gamma = gamma;
        cfg.horizon = horizon;
        cfg.seed = options.seed;
        std::ostringstream repro;
        repro << serialize_run_config(cfg);
        repro << to_text(invariants);
        repro << to_text(consensus);
        out.reproducer = repro.str();
    }
    return out;
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    if (options.count < 1) {
        throw std::invalid_argument("run_verification: count must be >= 1");
    }
    if (options.max_n < 2) {
        throw std::invalid_argument("run_verification: max_n must be >= 2");
    }
    std::vector<InstanceOutcome> outcomes(static_cast<std::size_t>(options.count));

#pragma omp parallel for schedule(dynamic) if (options.parallel)
    for (int i = 0; i < options.count; ++i) {
        outcomes[static_cast<std::size_t>(i)] = check_instance(options, i);
    }

    VerifyReport report;
    report.all_ok = true;
    std::ostringstream text;
    for (const auto& outcome : outcomes) {
        text << outcome.line << "\n";
        if (!outcome.ok) {
            ++report.failures;
            if (report.all_ok) {
                report.reproducer = outcome.reproducer;
            }
            report.all_ok = false;
        }
    }
    report.text = text.str();
    return report;
}

}  // namespace consensus
