// Command-line front end: `run` executes a configured simulation, `table`
// reproduces the reference cost table, `verify` sweeps random instances
// through the invariant suite, and `worstcase` sizes and measures a
// slow-convergence instance.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "consensus/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Self-triggered consensus simulator and analysis toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run_cmd = app.add_subcommand("run", "Run a simulation described by a config file");
    run_cmd->add_option("config", config_path, "Path to a key=value run config")->required();

    double table_alpha = 0.6;
    auto* table_cmd = app.add_subcommand("table", "Reproduce the reference cost table");
    table_cmd->add_option("--alpha", table_alpha, "Consensus band override (default 0.6)");

    consensus::VerifyOptions verify_options;
    bool serial = false;
    auto* verify_cmd = app.add_subcommand("verify", "Property-check random connected instances");
    verify_cmd->add_option("--count", verify_options.count, "Number of instances")->required();
    verify_cmd->add_option("--max-n", verify_options.max_n, "Largest agent count")->required();
    verify_cmd->add_option("--seed", verify_options.seed, "Base seed")->required();
    verify_cmd->add_flag("--serial", serial, "Disable parallel instance execution");

    double epsilon = 0.0;
    auto* worstcase_cmd = app.add_subcommand("worstcase", "Build and measure a tightness instance");
    worstcase_cmd->add_option("--epsilon", epsilon, "Bracket width in (0, 5)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : consensus::cli::kExitUsage;
    }

    if (run_cmd->parsed()) {
        return consensus::cli::cmd_run(config_path, std::cout, std::cerr);
    }
    if (table_cmd->parsed()) {
        return consensus::cli::cmd_table(table_alpha, std::cout, std::cerr);
    }
    if (verify_cmd->parsed()) {
        verify_options.parallel = !serial;
        return consensus::cli::cmd_verify(verify_options, std::cout, std::cerr);
    }
    if (worstcase_cmd->parsed()) {
        return consensus::cli::cmd_worstcase(epsilon, std::cout, std::cerr);
    }
    return consensus::cli::kExitUsage;
}
