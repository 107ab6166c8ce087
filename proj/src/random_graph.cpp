#include "consensus/random_graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace consensus {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

Graph random_connected_graph(int n, Rng& rng) {
    if (n < 1) {
        throw std::invalid_argument("random_connected_graph: n must be positive");
    }
    const double p = n > 1 ? std::min(1.0, 2.0 * std::log(static_cast<double>(n)) / n) : 1.0;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                if (rng.uniform(0.0, 1.0) < p) {
                    edges.emplace_back(i, j);
                }
            }
        }
        Graph g(n, edges);
        if (g.is_connected()) {
            return g;
        }
    }
    throw std::runtime_error("random_connected_graph: rejection cap reached");
}

}  // namespace consensus
