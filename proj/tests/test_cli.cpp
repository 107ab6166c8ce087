#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "consensus/cli.hpp"
#include "doctest.h"

using namespace consensus;

namespace {

struct TempConfig {
    std::string path;
    explicit TempConfig(const std::string& text) : path("cli_test_config.tmp") {
        std::ofstream out(path);
        out << text;
    }
    ~TempConfig() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("run subcommand prints the headline numbers") {
    const TempConfig cfg(
        "graph = fig6\n"
        "x0 = 7 2 4 3 1 5\n"
        "alpha = 0.6\n"
        "beta = 1\n"
        "gamma = 1\n");
    std::ostringstream out, err;
    CHECK(cli::cmd_run(cfg.path, out, err) == cli::kExitOk);
    const std::string text = out.str();
    CHECK(text.find("consensus_time=2.257504865\n") != std::string::npos);
    CHECK(text.find("costs=8,9,30,30,9,9\n") != std::string::npos);
    CHECK(text.find("C_MAS=95\n") != std::string::npos);
    CHECK(text.find("bound_2gT=6\n") != std::string::npos);
    CHECK(text.find("bound_satisfied=true\n") != std::string::npos);
}

TEST_CASE("run subcommand exit codes") {
    SUBCASE("missing file") {
        std::ostringstream out, err;
        CHECK(cli::cmd_run("no_such_config.tmp", out, err) == cli::kExitUsage);
    }
    SUBCASE("x0 length mismatch") {
        const TempConfig cfg("graph = fig6\nx0 = 1 2 3\nalpha = 0.6\nbeta = 1\n");
        std::ostringstream out, err;
        CHECK(cli::cmd_run(cfg.path, out, err) == cli::kExitUsage);
    }
    SUBCASE("disconnected topology is a simulation rejection") {
        const TempConfig cfg("graph = edges:4:1-2,3-4\nx0 = 0 1 2 3\nalpha = 0.6\nbeta = 1\n");
        std::ostringstream out, err;
        CHECK(cli::cmd_run(cfg.path, out, err) == cli::kExitRejected);
    }
}

TEST_CASE("run subcommand writes the requested csv files") {
    const TempConfig cfg(
        "graph = path:2\n"
        "x0 = 0 5\n"
        "alpha = 3\n"
        "beta = 1\n"
        "events_csv = cli_test_events.tmp\n");
    std::ostringstream out, err;
    CHECK(cli::cmd_run(cfg.path, out, err) == cli::kExitOk);
    std::ifstream written("cli_test_events.tmp");
    REQUIRE(written.good());
    std::string header;
    std::getline(written, header);
    CHECK(header == "agent,k,time,z,control,duration");
    written.close();
    std::remove("cli_test_events.tmp");
}

TEST_CASE("table subcommand renders and gates the reference rows") {
    std::ostringstream out, err;
    CHECK(cli::cmd_table(0.6, out, err) == cli::kExitOk);
    const std::string text = out.str();
    CHECK(text.find("C_MAS") != std::string::npos);
    for (const char* label : {"2T*", "10T*", "20T*"}) {
        CHECK(text.find(label) != std::string::npos);
    }
    // every row carries the aggregate 95
    std::size_t rows_with_95 = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find(" 95") != std::string::npos) ++rows_with_95;
    }
    CHECK(rows_with_95 == 3);

    std::ostringstream out2, err2;
    CHECK(cli::cmd_table(0.6, out2, err2) == cli::kExitOk);
    CHECK(out2.str() == text);  // byte-identical re-rendering
}

TEST_CASE("a doctored table run trips the gate") {
    std::ostringstream out, err;
    CHECK(cli::cmd_table(0.5, out, err) == cli::kExitMismatch);
    CHECK(err.str().find("table mismatch") != std::string::npos);
}

TEST_CASE("verify subcommand") {
    std::ostringstream out, err;
    VerifyOptions options{25, 10, 7, true};
    CHECK(cli::cmd_verify(options, out, err) == cli::kExitOk);
    CHECK(out.str().find("instances=25 failures=0") != std::string::npos);

    std::ostringstream out2, err2;
    CHECK(cli::cmd_verify({0, 10, 7, true}, out2, err2) == cli::kExitUsage);
    CHECK(cli::cmd_verify({5, 1, 7, true}, out2, err2) == cli::kExitUsage);
}

TEST_CASE("worstcase subcommand") {
    SUBCASE("epsilon=2 passes its bracket") {
        std::ostringstream out, err;
        CHECK(cli::cmd_worstcase(2.0, out, err) == cli::kExitOk);
        CHECK(out.str().find("n=11") != std::string::npos);
        CHECK(out.str().find("r=3") != std::string::npos);
        CHECK(out.str().find("within=true") != std::string::npos);
    }
    SUBCASE("epsilon=1 reports the known undershoot") {
        std::ostringstream out, err;
        CHECK(cli::cmd_worstcase(1.0, out, err) == cli::kExitMismatch);
        CHECK(out.str().find("n=21") != std::string::npos);
        CHECK(out.str().find("measured=3.566685744") != std::string::npos);
        CHECK(out.str().find("within=false") != std::string::npos);
    }
    SUBCASE("epsilon out of range") {
        std::ostringstream out, err;
        CHECK(cli::cmd_worstcase(6.0, out, err) == cli::kExitUsage);
        CHECK(cli::cmd_worstcase(0.0, out, err) == cli::kExitUsage);
    }
}
