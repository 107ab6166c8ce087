#include "consensus/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "consensus/protocol.hpp"

namespace consensus {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& text, const std::string& key) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw ConfigError("config: invalid number for `" + key + "`: " + text);
    }
    if (consumed != text.size()) {
        throw ConfigError("config: trailing characters in `" + key + "`: " + text);
    }
    return value;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, sep)) {
        parts.push_back(part);
    }
    return parts;
}

int parse_int(const std::string& text, const std::string& what) {
    std::size_t consumed = 0;
    int value = 0;
    try {
        value = std::stoi(text, &consumed);
    } catch (const std::exception&) {
        throw ConfigError("config: invalid integer in " + what + ": " + text);
    }
    if (consumed != text.size()) {
        throw ConfigError("config: invalid integer in " + what + ": " + text);
    }
    return value;
}

}  // namespace

RunConfig parse_run_config(std::istream& in) {
    RunConfig cfg;
    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) + ": expected `key = value`");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!seen.insert(key).second) {
            throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key `" + key + "`");
        }
        if (key == "graph") {
            cfg.graph = value;
        } else if (key == "x0") {
            std::istringstream nums(value);
            std::string token;
            while (nums >> token) {
                cfg.x0.push_back(parse_double(token, "x0"));
            }
            if (cfg.x0.empty()) {
                throw ConfigError("config: x0 must contain at least one value");
            }
        } else if (key == "alpha") {
            cfg.alpha = parse_double(value, key);
        } else if (key == "beta") {
            cfg.beta = parse_double(value, key);
        } else if (key == "gamma") {
            cfg.gamma = parse_double(value, key);
        } else if (key == "horizon") {
            if (value == "auto") {
                cfg.horizon.reset();
            } else {
                cfg.horizon = parse_double(value, key);
            }
        } else if (key == "trajectories_csv") {
            cfg.trajectories_csv = value;
        } else if (key == "events_csv") {
            cfg.events_csv = value;
        } else if (key == "seed") {
            try {
                cfg.seed = std::stoull(value);
            } catch (const std::exception&) {
                throw ConfigError("config: invalid seed: " + value);
            }
        } else {
            throw ConfigError("config line " + std::to_string(lineno) + ": unknown key `" + key + "`");
        }
    }
    for (const char* required : {"graph", "x0", "alpha", "beta"}) {
        if (!seen.count(required)) {
            throw ConfigError(std::string("config: missing required key `") + required + "`");
        }
    }
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    return parse_run_config(in);
}

std::string serialize_run_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "graph = " << cfg.graph << "\n";
    out << "x0 =";
    for (double v : cfg.x0) {
        out << " " << format_double(v);
    }
    out << "\n";
    out << "alpha = " << format_double(cfg.alpha) << "\n";
    out << "beta = " << format_double(cfg.beta) << "\n";
    out << "gamma = " << format_double(cfg.gamma) << "\n";
    out << "horizon = " << (cfg.horizon ? format_double(*cfg.horizon) : std::string("auto")) << "\n";
    if (!cfg.trajectories_csv.empty()) {
        out << "trajectories_csv = " << cfg.trajectories_csv << "\n";
    }
    if (!cfg.events_csv.empty()) {
        out << "events_csv = " << cfg.events_csv << "\n";
    }
    out << "seed = " << cfg.seed << "\n";
    return out.str();
}

Graph resolve_graph(const std::string& spec) {
    if (spec.empty()) {
        throw ConfigError("config: empty graph specification");
    }
    if (spec == "fig6") {
        // Six-node two-hub sample used by the `table` subcommand.
        return Graph(6, {{1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}});
    }
    const auto parts = split(spec, ':');
    if (parts[0] == "path" || parts[0] == "complete") {
        if (parts.size() != 2) {
            throw ConfigError("config: expected `" + parts[0] + ":<n>`");
        }
        const int n = parse_int(parts[1], "graph spec");
        try {
            return parts[0] == "path" ? path_graph(n) : complete_graph(n);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
    }
    if (parts[0] == "worstcase") {
        if (parts.size() != 3) {
            throw ConfigError("config: expected `worstcase:<n>:<r>`");
        }
        try {
            return worst_case_graph(parse_int(parts[1], "graph spec"), parse_int(parts[2], "graph spec"));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
    }
    if (parts[0] == "edges") {
        if (parts.size() != 3) {
            throw ConfigError("config: expected `edges:<n>:<i>-<j>,...`");
        }
        const int n = parse_int(parts[1], "graph spec");
        std::vector<std::pair<int, int>> edges;
        if (!parts[2].empty()) {
            for (const auto& item : split(parts[2], ',')) {
                const auto dash = item.find('-');
                if (dash == std::string::npos) {
                    throw ConfigError("config: malformed edge `" + item + "`");
                }
                edges.emplace_back(parse_int(item.substr(0, dash), "edge"),
                                   parse_int(item.substr(dash + 1), "edge"));
            }
        }
        try {
            return Graph(n, edges);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
    }
    try {
        return load_edge_list(spec);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

std::string graph_to_spec(const Graph& g) {
    std::ostringstream out;
    out << "edges:" << g.node_count() << ":";
    bool first = true;
    for (auto [a, b] : g.edges()) {
        if (!first) {
            out << ",";
        }
        first = false;
        out << a << "-" << b;
    }
    return out.str();
}

void validate_run_config(const RunConfig& cfg, const Graph& g) {
    if (!(cfg.alpha > 0.0)) {
        throw ConfigError("config: alpha must be positive");
    }
    if (!(cfg.beta > 0.0)) {
        throw ConfigError("config: beta must be positive");
    }
    if (!(cfg.gamma >= 1.0)) {
        throw ConfigError("config: gamma must be >= 1");
    }
    if (static_cast<int>(cfg.x0.size()) != g.node_count()) {
        throw ConfigError("config: x0 length " + std::to_string(cfg.x0.size()) +
                          " does not match graph node count " + std::to_string(g.node_count()));
    }
    if (cfg.horizon && !(*cfg.horizon > 0.0)) {
        throw ConfigError("config: horizon must be positive");
    }
}

double resolve_horizon(const RunConfig& cfg) {
    if (cfg.horizon) {
        return *cfg.horizon;
    }
    return 2.0 * cfg.gamma * t_star(cfg.x0, cfg.beta);
}

}  // namespace consensus
