#include <stdexcept>
#include <cmath>

#include "consensus/worstcase.hpp"
#include "doctest.h"

using namespace consensus;

TEST_CASE("n_mu_r on hand evaluations") {
    // mu=0.5, r=6: max{8, 17, 20, 4, 11} + 1
    CHECK(n_mu_r(0.5, 6) == 21);
    // mu=2, r=1: max{8, 5, 5, 3, -4} + 1
    CHECK(n_mu_r(2.0, 1) == 9);
    // every variable term below the floor of 8
    CHECK(n_mu_r(4.0, 1) == 9);
    CHECK(n_mu_r(1.0, 3) == 11);
}

TEST_CASE("n_mu_r argument validation") {
    CHECK_THROWS_AS(n_mu_r(0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(n_mu_r(-1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(n_mu_r(1.0, 0), std::invalid_argument);
}

TEST_CASE("n_mu_r is monotone the right way") {
    const double mus[] = {0.25, 0.5, 1.0, 2.0, 4.0};
    for (int r : {1, 3, 6, 10}) {
        for (std::size_t k = 0; k + 1 < 5; ++k) {
            CHECK(n_mu_r(mus[k], r) >= n_mu_r(mus[k + 1], r));
        }
    }
    for (double mu : {0.5, 1.0, 2.0}) {
        for (int r = 1; r < 12; ++r) {
            CHECK(n_mu_r(mu, r + 1) >= n_mu_r(mu, r));
        }
    }
}

TEST_CASE("build_instance sizes the family from epsilon") {
    SUBCASE("epsilon = 1") {
        const auto inst = build_instance(1.0);
        CHECK(inst.r == 6);
        CHECK(inst.n == 21);
        CHECK(inst.graph.node_count() == 21);
        CHECK(inst.x0.front() == 0.0);
        CHECK(inst.x0.back() == 5.0);
        CHECK(t_star(inst.x0, inst.params.beta) == 2.5);
        CHECK(local_disagreement(inst.x0, inst.graph, 1) == -5.0 * inst.r);
        CHECK(inst.expected_lower == 4.0);
        CHECK(inst.expected_upper == 5.0);
    }
    SUBCASE("epsilon = 2") {
        const auto inst = build_instance(2.0);
        CHECK(inst.r == 3);
        CHECK(inst.n == 11);
        CHECK(inst.expected_lower == 3.0);
        CHECK(t_star(inst.x0, inst.params.beta) == 2.5);
    }
    SUBCASE("epsilon near the top gives a vacuous lower edge") {
        const auto inst = build_instance(4.9);
        CHECK(inst.expected_lower == doctest::Approx(0.1));
        CHECK(inst.expected_upper == 5.0);
    }
    SUBCASE("epsilon out of range") {
        CHECK_THROWS_AS(build_instance(0.0), std::invalid_argument);
        CHECK_THROWS_AS(build_instance(5.0), std::invalid_argument);
        CHECK_THROWS_AS(build_instance(6.0), std::invalid_argument);
    }
}

TEST_CASE("tightness measurement at desk scale") {
    SUBCASE("epsilon = 2 lands inside its bracket") {
        const auto outcome = verify_tightness(build_instance(2.0));
        CHECK(outcome.measured == doctest::Approx(3.0641784917149386).epsilon(1e-9));
        CHECK(outcome.within);
    }
    SUBCASE("epsilon = 1 undershoots the nominal lower edge at n=21") {
        // The sizing formula is too small here: the measured time stays a
        // regression value, and the bracket comparison honestly reports the
        // miss (the family only reaches [4, 5] from roughly n=46 upward).
        const auto outcome = verify_tightness(build_instance(1.0));
        CHECK(outcome.measured == doctest::Approx(3.5666857435528074).epsilon(1e-9));
        CHECK_FALSE(outcome.within);
        CHECK(outcome.report.achieved);
        CHECK(outcome.report.satisfied);  // the 2*T* upper bound itself holds
    }
}
