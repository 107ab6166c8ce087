#include "consensus/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace consensus {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("Graph: node count must be positive");
    }
    adj_.assign(static_cast<std::size_t>(n), {});
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 1 || a > n || b < 1 || b > n) {
            throw std::invalid_argument("Graph: edge endpoint out of range: (" +
                                        std::to_string(a) + "," + std::to_string(b) + ")");
        }
        if (a == b) {
            throw std::invalid_argument("Graph: self-loop on node " + std::to_string(a));
        }
        edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [a, b] : edges_) {
        adj_[a - 1].push_back(b);
        adj_[b - 1].push_back(a);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
    }
}

void Graph::check_agent(int agent) const {
    if (agent < 1 || agent > n_) {
        throw std::invalid_argument("Graph: agent index out of range: " + std::to_string(agent));
    }
}

const std::vector<int>& Graph::neighbors(int agent) const {
    check_agent(agent);
    return adj_[agent - 1];
}

int Graph::degree(int agent) const {
    check_agent(agent);
    return static_cast<int>(adj_[agent - 1].size());
}

bool Graph::has_edge(int a, int b) const {
    check_agent(a);
    check_agent(b);
    const auto& list = adj_[a - 1];
    return std::binary_search(list.begin(), list.end(), b);
}

bool Graph::is_connected() const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{1};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj_[u - 1]) {
            if (!seen[v - 1]) {
                seen[v - 1] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n_;
}

std::vector<std::vector<int>> Graph::laplacian() const {
    std::vector<std::vector<int>> lap(static_cast<std::size_t>(n_),
                                      std::vector<int>(static_cast<std::size_t>(n_), 0));
    for (int i = 1; i <= n_; ++i) {
        lap[i - 1][i - 1] = degree(i);
        for (int j : adj_[i - 1]) {
            lap[i - 1][j - 1] = -1;
        }
    }
    return lap;
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

Graph worst_case_graph(int n, int r) {
    if (n < 3) {
        throw std::invalid_argument("worst_case_graph: need n >= 3");
    }
    if (r < 1 || r > n - 1) {
        throw std::invalid_argument("worst_case_graph: need 1 <= r <= n-1");
    }
    std::vector<std::pair<int, int>> edges;
    for (int j = 2; j <= r + 1; ++j) {
        edges.emplace_back(1, j);
    }
    for (int i = 2; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    bool have_n = false;
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        if (!have_n) {
            if (fields >> n) {
                have_n = true;
                std::string extra;
                if (fields >> extra) {
                    throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                                ": expected a single node count");
                }
            }
            continue;
        }
        int a = 0, b = 0;
        if (!(fields >> a)) {
            continue;  // blank or comment-only line
        }
        if (!(fields >> b)) {
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": expected `i j`");
        }
        std::string extra;
        if (fields >> extra) {
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": trailing tokens after `i j`");
        }
        edges.emplace_back(a, b);
    }
    if (!have_n) {
        throw std::invalid_argument("edge list: missing node count line");
    }
    return Graph(n, edges);
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open edge list file: " + path);
    }
    return parse_edge_list(in);
}

}  // namespace consensus
