// Times the adversarial-duration oracle: serial reference vs the OpenMP
// kernel. Profile counts grow as grid^pieces, so the case list shrinks as the
// discretization refines to keep the serial baseline measurable in seconds.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "consensus/analysis.hpp"

using namespace consensus;

namespace {

struct Case {
    double z0;
    int degree;
};

double time_grid(bool parallel, int pieces, int grid, const std::vector<Case>& cases,
                 double& checksum) {
    const ProtocolParams params{0.6, 1.0, 1.0};
    const auto start = std::chrono::steady_clock::now();
    for (const Case& c : cases) {
        checksum += parallel
                        ? adversarial_duration_oracle(c.z0, c.degree, params, pieces, grid)
                        : adversarial_duration_oracle_serial(c.z0, c.degree, params, pieces, grid);
    }
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
    std::vector<Case> wide;
    for (double z0 : {0.0, 0.3, -0.3, 0.6, -0.6, 1.2, -1.2, 3.0, -3.0}) {
        for (int degree : {1, 2, 3}) {
            wide.push_back({z0, degree});
        }
    }
    const std::vector<Case> narrow{{0.0, 1}, {-0.6, 1}, {-0.6, 3}, {0.0, 3}, {-3.0, 1}, {3.0, 3}};

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
    std::printf("%-22s %-7s %-11s %-11s %s\n", "discretization", "cases", "serial[s]",
                "parallel[s]", "speedup");

    struct Setup {
        int pieces;
        int grid;
        const std::vector<Case>* cases;
    };
    const Setup setups[] = {{4, 9, &wide}, {5, 9, &wide}, {6, 9, &narrow}};
    for (const auto& setup : setups) {
        double check_serial = 0.0, check_parallel = 0.0;
        const double serial = time_grid(false, setup.pieces, setup.grid, *setup.cases, check_serial);
        const double parallel =
            time_grid(true, setup.pieces, setup.grid, *setup.cases, check_parallel);
        if (check_serial != check_parallel) {
            std::printf("MISMATCH between serial and parallel results\n");
            return 1;
        }
        std::printf("pieces=%d grid=%-2d       %-7zu %-11.3f %-11.3f %.2fx\n", setup.pieces,
                    setup.grid, setup.cases->size(), serial, parallel, serial / parallel);
    }
    return 0;
}
