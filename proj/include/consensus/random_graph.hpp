#pragma once

#include <cstdint>
#include <random>

#include "consensus/graph.hpp"

namespace consensus {

// Deterministic RNG wrapper. Distributions are derived from raw mt19937_64
// output directly so sequences are identical across platforms and compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        const double unit = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * unit;
    }

    // Uniform in {lo, ..., hi}.
    int uniform_int(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(gen_() % span);
    }

private:
    std::mt19937_64 gen_;
};

// splitmix64 step; decorrelates per-instance seeds derived from one base seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Erdos-Renyi with edge probability min(1, 2 ln(n)/n), resampled until
// connected. Throws std::runtime_error after 1000 rejections.
Graph random_connected_graph(int n, Rng& rng);

}  // namespace consensus
