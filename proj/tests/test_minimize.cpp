#include "beg/dissipation.hpp"
#include "beg/fixtures.hpp"
#include "beg/minimize.hpp"
#include "beg/octagon.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace beg;

namespace {

ModelParams make_params(double k, double gamma, double zeta, double eps) {
    ModelParams p;
    p.k = k;
    p.gamma = gamma;
    p.zeta = zeta;
    p.epsilon = eps;
    return p;
}

// Exhaustive search written against the oracle energy and distances.
double oracle_minimum(const SpinGrid& u_old, const ModelParams& p, const Region& free_cells) {
    const auto I_old = oracle::to_set(u_old.plus());
    const auto Z_old = oracle::to_set(u_old.zero());
    const std::size_t n = free_cells.size();
    std::size_t combos = 1;
    for (std::size_t i = 0; i < n; ++i) combos *= 3;
    double best = std::numeric_limits<double>::infinity();
    RectSpec w = u_old.window();
    for (Coord c : free_cells) w = w.united({c.x, c.x, c.y, c.y});
    for (std::size_t code = 0; code < combos; ++code) {
        SpinGrid u = u_old.with_window(w);
        std::size_t c = code;
        for (Coord cell : free_cells) {
            u.set(cell, int(c % 3) - 1);
            c /= 3;
        }
        const auto I = oracle::to_set(u.plus());
        const auto Z = oracle::to_set(u.zero());
        double d1 = 0;
        for (auto q : I)
            if (!I_old.count(q)) d1 += oracle::d1_to_boundary(q, I_old);
        for (auto q : I_old)
            if (!I.count(q)) d1 += oracle::d1_to_boundary(q, I_old);
        const double d0 = std::abs(double(Z.size()) - double(Z_old.size()));
        const double eps = p.epsilon;
        const double F = oracle::energy(u, p.k) + (eps * eps * eps * d1 + std::pow(eps, p.gamma) * d0) / p.tau();
        best = std::min(best, F);
    }
    return best;
}

}  // namespace

TEST_SUITE("minimize") {

TEST_CASE("brute force agrees with an independent enumeration") {
    const ModelParams p3 = make_params(0.5, 3, 1, 1.0 / 8);
    const ModelParams p1 = make_params(0.6, 1, 0.5, 1.0 / 4);
    const Region I = Region::rectangle({0, 1, 0, 0});
    const Region free_cells = Region::rectangle({-1, 2, 0, 0});
    for (const ModelParams& p : {p3, p1}) {
        const SpinGrid w = SpinGrid::from_phases(I, outer_boundary(I), p.epsilon);
        const BruteForceResult r = brute_force_minimizer(w, p, free_cells);
        CHECK(r.evaluated == 81);
        CHECK(r.value.total == doctest::Approx(oracle_minimum(w, p, free_cells)).epsilon(1e-13));
        CHECK(r.value.total == step_functional(r.u, w, p).total);
    }
}

TEST_CASE("brute force refuses oversized windows") {
    const SpinGrid u = SpinGrid::from_phases(Region::rectangle({0, 4, 0, 4}), {}, 0.125);
    BruteForceOptions o;
    o.cap = 1000;
    CHECK_THROWS(brute_force_minimizer(u, make_params(0.5, 3, 1, 0.125), Region::rectangle({0, 4, 0, 4}), o));
}

TEST_CASE("structured minimizers match brute force on small fixtures") {
    int checked = 0;
    for (const OracleFixture& f : oracle_fixtures()) {
        if (f.free_cells.size() > 12) continue;  // the full suite runs in the acceptance binary
        const OracleOutcome o = run_oracle_fixture(f);
        CAPTURE(o.name);
        CHECK(o.discrepancy <= 1e-12);
        CHECK(o.structured_in_window);
        ++checked;
    }
    CHECK(checked >= 8);
}

TEST_CASE("gamma > 2 step keeps the new set wetted and inside the old one") {
    const ModelParams p = make_params(0.5, 3, 0.25, 1.0 / 32);
    const Region I = OctagonOffsets::from_box_and_cuts({0, 39, 0, 39}, {12, 12, 12, 12}).cells();
    const SpinGrid u = SpinGrid::from_phases(I, outer_boundary(I), p.epsilon);
    const StructuredResult r = structured_minimizer_gamma_high(u, p);
    REQUIRE_FALSE(r.collapsed);
    CHECK(r.u.plus().is_subset_of(I));
    CHECK(r.u.zero() == outer_boundary(r.u.plus()));
    CHECK(r.value.total <= total_energy(u, p));
    CHECK(r.value.total == step_functional(r.u, u, p).total);
}

TEST_CASE("the empty candidate can be excluded") {
    // A 2x2 block at eps = 1/8 collapses under the exact minimizer.
    const ModelParams p = make_params(0.5, 3, 1, 1.0 / 8);
    const Region I = Region::rectangle({0, 1, 0, 1});
    const SpinGrid u = SpinGrid::from_phases(I, outer_boundary(I), p.epsilon);
    const StructuredResult exact = structured_minimizer_gamma_high(u, p);
    CHECK(exact.collapsed);
    StructuredOptions o;
    o.include_empty = false;
    const StructuredResult kept = structured_minimizer_gamma_high(u, p, o);
    CHECK_FALSE(kept.collapsed);
    CHECK_FALSE(kept.u.plus().empty());
    CHECK(kept.value.total >= exact.value.total);
}

TEST_CASE("audit records every candidate with consistent totals") {
    const ModelParams p = make_params(0.6, 3, 0.1, 1.0 / 16);
    const Region I = OctagonOffsets::from_box_and_cuts({0, 7, 0, 7}, {2, 2, 2, 2}).cells();
    const SpinGrid u = SpinGrid::from_phases(I, outer_boundary(I), p.epsilon);
    StructuredOptions o;
    o.audit = true;
    const StructuredResult r = structured_minimizer_gamma_high(u, p, o);
    REQUIRE_FALSE(r.audit.empty());
    double best = std::numeric_limits<double>::infinity();
    for (const CandidateRecord& c : r.audit) {
        CHECK(c.total == doctest::Approx(combine_functional(c.energy, c.d1, c.d0, p)).epsilon(1e-13));
        best = std::min(best, c.total);
    }
    CHECK(r.value.total == doctest::Approx(best).epsilon(1e-13));
}

TEST_CASE("surfactant placement") {
    const Region I = Region::rectangle({0, 3, 0, 2});
    const Region ring = outer_boundary(I);
    CHECK(place_surfactant(I, long(ring.size())) == ring);
    for (long extra : {1L, 4L, 9L, 30L}) {
        const Region Z = place_surfactant(I, long(ring.size()) + extra);
        CHECK(Z.size() == ring.size() + std::size_t(extra));
        CHECK(ring.is_subset_of(Z));
        CHECK(set_intersection(Z, I).empty());
        const Region Zs = place_surfactant(I, long(ring.size()) + extra, 42);
        CHECK(Zs.size() == Z.size());
        CHECK(place_surfactant(I, long(ring.size()) + extra, 42) == Zs);
    }
    // The first extra layer fills the four concave corners of I u ring.
    const Region Z4 = place_surfactant(I, long(ring.size()) + 4);
    CHECK(Z4.contains({-1, -1}));
    CHECK(Z4.contains({4, 3}));
    CHECK_THROWS(place_surfactant(I, long(ring.size()) - 1));
}

TEST_CASE("stage threshold") {
    CHECK(pinning_threshold(100, 1.0 / 64, 1.0 / 8) == doctest::Approx(std::pow(1.0 / 64, 1.0 / 8)));
    CHECK(pinning_threshold(1000000, 1.0 / 64, 1.0 / 8) == doctest::Approx(2.0 / 64 * 1000));
}

TEST_CASE("gamma < 2 step conserves surfactant and pins diagonal lines") {
    const ModelParams p = make_params(0.5, 1, 1, 1.0 / 64);
    const OctagonOffsets o = OctagonOffsets::from_box_and_cuts({0, 49, 0, 49}, {12, 12, 12, 12});
    const Region I = o.cells();
    const Region Z = outer_boundary(I);
    const SpinGrid u = SpinGrid::from_phases(I, Z, p.epsilon);
    const StructuredResult r = structured_minimizer_gamma_low(u, p);
    REQUIRE_FALSE(r.collapsed);
    CHECK(r.u.zero().size() == Z.size());
    const OctagonOffsets h = OctagonOffsets::hull(r.u.plus());
    CHECK(h.smin == o.smin);
    CHECK(h.smax == o.smax);
    CHECK(h.dmin == o.dmin);
    CHECK(h.dmax == o.dmax);
    CHECK(r.u.plus().is_subset_of(I));
    for (int i = 0; i < 4; ++i) CHECK(r.disp.beta[i] == 0);
}

}  // TEST_SUITE
