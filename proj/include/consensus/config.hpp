#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "consensus/graph.hpp"

namespace consensus {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat key-value run description. Required keys: graph, x0, alpha, beta.
// Optional: gamma (default 1), horizon (default auto = 2*gamma*t_star),
// trajectories_csv, events_csv, seed. Lines are `key = value`, `#` comments.
struct RunConfig {
    std::string graph;  // builtin name, inline edges, or edge-list file path
    std::vector<double> x0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 1.0;
    std::optional<double> horizon;  // nullopt = "auto"
    std::string trajectories_csv;
    std::string events_csv;
    std::uint64_t seed = 0;
};

RunConfig parse_run_config(std::istream& in);
RunConfig load_run_config(const std::string& path);
std::string serialize_run_config(const RunConfig& cfg);

// Accepts "fig6", "path:<n>", "complete:<n>", "worstcase:<n>:<r>", the inline
// form "edges:<n>:<i>-<j>,<i>-<j>,...", or an edge-list file path.
Graph resolve_graph(const std::string& spec);

// Inline serialization of an arbitrary graph in the "edges:..." form.
std::string graph_to_spec(const Graph& g);

// Throws ConfigError for non-positive alpha/beta, gamma < 1, or an x0 whose
// length differs from the graph's node count.
void validate_run_config(const RunConfig& cfg, const Graph& g);

// Explicit horizon, or 2*gamma*t_star(x0, beta) when the config says auto.
double resolve_horizon(const RunConfig& cfg);

}  // namespace consensus
