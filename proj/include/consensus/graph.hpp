#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace consensus {

// Simple undirected communication topology. Agents are labeled 1..n at every
// public interface. Neighbor lists are stored sorted ascending so downstream
// iteration is deterministic. Instances are immutable after construction and
// safe to share across threads.
class Graph {
public:
    // Builds from an edge list. Duplicate edges (in either orientation) are
    // deduplicated; self-loops and out-of-range endpoints are rejected.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& neighbors(int agent) const;
    int degree(int agent) const;
    bool has_edge(int a, int b) const;

    // Unique undirected edges with first < second, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool is_connected() const;

    // L[i][i] = degree(i+1), L[i][j] = -1 on edges, 0 elsewhere.
    std::vector<std::vector<int>> laplacian() const;

    bool operator==(const Graph&) const = default;

private:
    void check_agent(int agent) const;

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

Graph path_graph(int n);
Graph complete_graph(int n);

// Hub-plus-clique family: node 1 is adjacent to exactly nodes 2..r+1, and
// nodes 2..n are pairwise adjacent. Requires n >= 3 and 1 <= r <= n-1.
Graph worst_case_graph(int n, int r);

// Edge-list text format: first line `n`, then one `i j` pair per line.
// Blank lines are skipped and `#` starts a comment.
Graph parse_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);

}  // namespace consensus
