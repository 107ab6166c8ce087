// Acceptance suite: each numbered criterion runs at its stated tolerance and
// prints one pass/fail line. The process exit code is the failure count, so
// ctest reports red when any criterion misses.
//
// Usage: acceptance [path-to-consensus_sim]
// The optional binary path enables the process-level determinism check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "consensus/analysis.hpp"
#include "consensus/cli.hpp"
#include "consensus/config.hpp"
#include "consensus/engine.hpp"
#include "consensus/verify.hpp"
#include "consensus/worstcase.hpp"

using namespace consensus;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, double seconds,
            const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", number,
                name.c_str(), seconds, detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

Graph sample6() { return Graph(6, {{1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}}); }
const std::vector<double> kX0{7, 2, 4, 3, 1, 5};
const std::vector<long> kCosts{8, 9, 30, 30, 9, 9};

bool table_row(double gamma, double expected_time, double time_tol, double budget,
               std::string& detail) {
    Timer timer;
    const ProtocolParams params{0.6, 1.0, gamma};
    const double horizon = 2.0 * gamma * 3.0;
    const auto result = run(sample6(), kX0, params, horizon);
    const auto consensus = consensus_time(result);
    const auto cost = communication_cost(result, horizon);
    const double elapsed = timer.seconds();

    std::ostringstream out;
    bool ok = true;
    if (cost.per_agent != kCosts || cost.aggregate != 95) {
        ok = false;
        out << "costs [";
        for (long c : cost.per_agent) out << c << " ";
        out << "] aggregate " << cost.aggregate << "; ";
    }
    if (!consensus.achieved || std::abs(consensus.consensus_time - expected_time) > time_tol) {
        ok = false;
        out << "time " << consensus.consensus_time << " vs " << expected_time << "+/-" << time_tol
            << "; ";
    }
    if (elapsed >= budget) {
        ok = false;
        out << "runtime " << elapsed << "s exceeds " << budget << "s; ";
    }
    detail += out.str();
    return ok;
}

std::string run_process(const std::string& command) {
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return "<popen failed>";
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        output.append(buffer, got);
    }
    pclose(pipe);
    return output;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli_binary = argc > 1 ? argv[1] : "";

    {  // 1. cost table and consensus time at gamma = 1
        Timer timer;
        std::string detail;
        const bool ok = table_row(1.0, 2.26, 0.01, 1.0, detail);
        report(1, "reference costs [8,9,30,30,9,9]/95 and time 2.26+/-0.01 at gamma=1", ok,
               timer.seconds(), detail);
    }

    {  // 2. identical costs and scaled times at gamma = 5 and 10
        Timer timer;
        std::string detail;
        bool ok = table_row(5.0, 11.3, 0.05, 1.0, detail);
        ok = table_row(10.0, 22.6, 0.1, 1.0, detail) && ok;
        report(2, "stretched runs keep the cost vector and settle at 11.3/22.6", ok,
               timer.seconds(), detail);
    }

    {  // 3. bound and invariant suite over 200 random connected instances
        Timer timer;
        VerifyOptions options;
        options.count = 200;
        options.max_n = 10;
        options.seed = 12345;
        const auto verdict = run_verification(options);
        const double elapsed = timer.seconds();
        std::string detail;
        bool ok = verdict.all_ok;
        if (!ok) detail = std::to_string(verdict.failures) + " failing instances";
        if (elapsed >= 30.0) {
            ok = false;
            detail += " runtime over 30s";
        }
        report(3, "200 random instances meet the 2*gamma*T* bound and all invariants", ok,
               timer.seconds(), detail);
    }

    {  // 4. oracle equivalence with the closed-form durations
        Timer timer;
        bool ok = true;
        std::string detail;
        for (double beta : {1.0, 0.5}) {
            const ProtocolParams params{0.6, beta, 1.0};
            for (double z0 : {0.0, 0.3, -0.3, 0.6, -0.6, 1.2, -1.2, 3.0, -3.0}) {
                for (int degree : {1, 2, 3}) {
                    const double closed = plan_update(z0, degree, params).duration;
                    const double estimate =
                        adversarial_duration_oracle(z0, degree, params, 4, 9);
                    if (std::abs(estimate - closed) > 0.01 * closed) {
                        ok = false;
                        std::ostringstream miss;
                        miss << "z0=" << z0 << " degree=" << degree << " beta_eff=" << beta
                             << " oracle=" << estimate << " closed=" << closed << "; ";
                        detail += miss.str();
                    }
                }
            }
        }
        const double elapsed = timer.seconds();
        if (elapsed >= 60.0) {
            ok = false;
            detail += "runtime over 60s";
        }
        report(4, "max-min oracle matches closed forms within 1% on the 54-case grid", ok,
               timer.seconds(), detail);
    }

    {  // 5. sized slow-convergence instances against their nominal brackets
        Timer timer;
        bool ok = true;
        std::string detail;
        struct Case {
            double epsilon;
            int n, r;
            double lo, hi;
        };
        for (const Case& c : {Case{1.0, 21, 6, 4.0, 5.0}, Case{2.0, 11, 3, 3.0, 5.0}}) {
            Timer one;
            const auto instance = build_instance(c.epsilon);
            std::ostringstream miss;
            if (instance.n != c.n || instance.r != c.r) {
                ok = false;
                miss << "sizing n=" << instance.n << " r=" << instance.r << "; ";
            }
            const auto outcome = verify_tightness(instance);
            if (!(outcome.measured >= c.lo && outcome.measured <= c.hi)) {
                ok = false;
                miss << "epsilon=" << c.epsilon << " measured=" << outcome.measured
                     << " outside [" << c.lo << "," << c.hi << "]; ";
            }
            if (one.seconds() >= 5.0) {
                ok = false;
                miss << "runtime over 5s; ";
            }
            detail += miss.str();
        }
        report(5, "tightness instances epsilon=1 (n=21) in [4,5] and epsilon=2 (n=11) in [3,5]",
               ok, timer.seconds(), detail);
    }

    {  // 6. event-by-event gamma scaling
        Timer timer;
        const auto base = run(sample6(), kX0, ProtocolParams{0.6, 1.0, 1.0}, 6.0);
        const auto slow = run(sample6(), kX0, ProtocolParams{0.6, 1.0, 5.0}, 30.0);
        bool ok = true;
        std::string detail;
        std::vector<std::vector<double>> base_times(7), slow_times(7);
        for (const auto& ev : base.events) base_times[ev.agent].push_back(ev.time);
        for (const auto& ev : slow.events) slow_times[ev.agent].push_back(ev.time);
        for (int agent = 1; agent <= 6 && ok; ++agent) {
            if (base_times[agent].size() != slow_times[agent].size()) {
                ok = false;
                detail = "event count differs for agent " + std::to_string(agent);
                break;
            }
            for (std::size_t k = 0; k < base_times[agent].size(); ++k) {
                const double scaled = 5.0 * base_times[agent][k];
                const double got = slow_times[agent][k];
                if (std::abs(got - scaled) > 1e-12 * std::max({1.0, scaled, got})) {
                    ok = false;
                    detail = "agent " + std::to_string(agent) + " event " + std::to_string(k);
                    break;
                }
            }
        }
        report(6, "gamma=5 event times equal 5x the gamma=1 times to 1e-12 relative", ok,
               timer.seconds(), detail);
    }

    {  // 7. byte-identical table rendering
        Timer timer;
        std::ostringstream out1, err1, out2, err2;
        const int rc1 = cli::cmd_table(0.6, out1, err1);
        const int rc2 = cli::cmd_table(0.6, out2, err2);
        bool ok = rc1 == 0 && rc2 == 0 && out1.str() == out2.str();
        std::string detail = ok ? "" : "in-process renders differ";
        if (ok && !cli_binary.empty()) {
            const std::string first = run_process("'" + cli_binary + "' table");
            const std::string second = run_process("'" + cli_binary + "' table");
            if (first.empty() || first != second) {
                ok = false;
                detail = "process invocations differ";
            }
        }
        report(7, "repeated table invocations are byte-identical", ok, timer.seconds(), detail);
    }

    std::printf("%d of 7 criteria failed\n", g_failures);
    return g_failures;
}
