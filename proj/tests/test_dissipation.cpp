#include "beg/dissipation.hpp"
#include "beg/octagon.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace beg;

TEST_SUITE("dissipation") {

TEST_CASE("removing the bottom row of a square") {
    const Region old_I = Region::rectangle({0, 4, 0, 4});
    const Region new_I = Region::rectangle({0, 4, 1, 4});
    // Five cells at distance 1 from the old boundary.
    CHECK(bulk_distance_sum(new_I, old_I) == 5);
    CHECK(dissipation_bulk(new_I, old_I, 0.5) == 5 * 0.125);
}

TEST_CASE("bulk distance against the oracle") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Region a = oracle::random_staircase(rng, 7, 7);
        const Region b = oracle::random_staircase(rng, 7, 7);
        const auto A = oracle::to_set(a);
        std::int64_t want = 0;
        for (Coord c : symmetric_difference(b, a)) want += oracle::d1_to_boundary({c.x, c.y}, A);
        CHECK(bulk_distance_sum(b, a) == want);
    }
}

TEST_CASE("surfactant dissipation is the change in the zero-phase count") {
    const Region z0{{0, 0}, {1, 0}, {2, 0}};
    const Region z1{{1, 0}, {2, 0}, {3, 0}, {4, 0}};
    CHECK(dissipation_surfactant(z1, z0) == 1);
    CHECK(dissipation_surfactant(z0, z1) == 1);
    // Moving surfactant around without changing the count is free.
    CHECK(dissipation_surfactant(z0.translated({5, 5}), z0) == 0);
}

TEST_CASE("functional on a 6x6 fixture equals the component sum") {
    // Octagon with its ring; then one corner cell and one ring cell are removed.
    const double eps = 1.0 / 8;
    ModelParams p;
    p.k = 0.5;
    p.gamma = 3;
    p.zeta = 0.5;
    p.epsilon = eps;
    const Region I0 = OctagonOffsets::from_box_and_cuts({0, 5, 0, 5}, {1, 1, 1, 1}).cells();
    const Region Z0 = outer_boundary(I0);
    const SpinGrid u0 = SpinGrid::from_phases(I0, Z0, eps);
    const Region I1 = set_difference(I0, Region{{1, 0}});
    const Region Z1 = set_difference(Z0, Region{{-1, 2}});
    const SpinGrid u1 = SpinGrid::from_phases(I1, Z1, eps);

    const StepFunctionalValue v = step_functional(u1, u0, p);
    const double E = oracle::energy(u1, p.k);
    const double d1 = eps * eps * eps * 1;  // (1,0) sits on the old boundary
    const std::int64_t d0 = 1;
    const double tau = p.zeta * eps;
    CHECK(v.energy == E);
    CHECK(v.d1 == d1);
    CHECK(v.d0 == d0);
    CHECK(v.total == doctest::Approx(E + (d1 + std::pow(eps, 3) * d0) / tau).epsilon(1e-15));
    CHECK(combine_functional(E, d1, d0, p) == v.total);
}

}  // TEST_SUITE
