#include "beg/dissipation.hpp"
#include "beg/errors.hpp"
#include "beg/flow.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

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

InitialCondition octagon(double half, double cut) {
    InitialCondition ic;
    ic.octagon = OctagonSpec::from_box(-half, half, -half, half, {cut, cut, cut, cut});
    return ic;
}

}  // namespace

TEST_SUITE("flow") {

TEST_CASE("initial configuration rings the discretized octagon") {
    const ModelParams p = make_params(0.5, 3, 1, 1.0 / 16);
    const SpinGrid u = initial_configuration(octagon(0.5, 0.25), p);
    CHECK(u.zero() == outer_boundary(u.plus()));
    CHECK(u.plus() == discretize_octagon(octagon(0.5, 0.25).octagon, p.epsilon));

    InitialCondition more = octagon(0.5, 0.25);
    more.surfactant_count = long(u.zero().size()) + 10;
    CHECK(long(initial_configuration(more, p).zero().size()) == *more.surfactant_count);
    more.surfactant_count = 3;
    CHECK_THROWS_AS(initial_configuration(more, p), ValidationError);
}

TEST_CASE("gamma > 2 run: inclusion, descent and wetting at every step") {
    const ModelParams p = make_params(0.5, 3, 1, 1.0 / 32);
    FlowOptions o;
    o.max_steps = 30;
    const FlowTrace tr = run_flow(octagon(0.6, 0.3), p, o);
    REQUIRE(tr.steps.size() >= 2);
    for (std::size_t j = 1; j < tr.steps.size(); ++j) {
        const FlowStep& a = tr.steps[j - 1];
        const FlowStep& b = tr.steps[j];
        CHECK(b.u.plus().is_subset_of(a.u.plus()));
        CHECK(b.value.total <= total_energy(a.u, p) + 1e-12);
        CHECK(b.value.total == step_functional(b.u, a.u, p).total);
        CHECK(b.value.energy == oracle::energy(b.u, p.k));
        CHECK(b.u.zero() == outer_boundary(b.u.plus()));
        CHECK(b.t == doctest::Approx(double(b.j) * p.tau()));
    }
}

TEST_CASE("gamma < 2 run conserves the surfactant count") {
    const ModelParams p = make_params(0.5, 1, 1, 1.0 / 64);
    FlowOptions o;
    o.max_steps = 40;
    const FlowTrace tr = run_flow(octagon(0.4, 0.2), p, o);
    REQUIRE(tr.steps.size() > 5);
    for (const FlowStep& s : tr.steps) CHECK(long(s.u.zero().size()) == tr.surfactant_count);
    for (const SideRow& r : extract_side_series(tr)) CHECK(r.n_zero == tr.surfactant_count);
}

TEST_CASE("a pinned configuration stops after one step") {
    // P = 0.8 > 2 zeta (1-k) = 0.5 and D = 0.85 > 2 sqrt2 zeta (1-k) = 0.71: nothing moves.
    const ModelParams p = make_params(0.5, 3, 0.5, 1.0 / 16);
    const FlowTrace tr = run_flow(octagon(1.0, 0.6), p, {});
    CHECK(tr.stop == StopReason::PinnedSteady);
    REQUIRE(tr.steps.size() == 2);
    CHECK(tr.steps[1].u.same_configuration(tr.steps[0].u));
    // Pinned runs extend to any later time.
    CHECK(region_at_time(tr, 5.0) == tr.steps[0].u.plus());
}

TEST_CASE("collapse and the width threshold stop the run") {
    const ModelParams p = make_params(0.5, 3, 1, 1.0 / 32);
    FlowOptions o;
    o.max_steps = 200;
    o.width_threshold = 0;
    const FlowTrace collapse = run_flow(octagon(0.25, 0.1), p, o);
    CHECK(collapse.stop == StopReason::SideCollapse);
    CHECK(collapse.steps.back().u.plus().empty());
    CHECK(collapse.steps.back().shape == "empty");

    // Sides of about ten cells are already below a threshold of twenty.
    o.width_threshold = 20;
    const FlowTrace narrow = run_flow(octagon(0.25, 0.1), p, o);
    CHECK(narrow.stop == StopReason::WidthBelowThreshold);
    CHECK(narrow.steps.size() == 1);
}

TEST_CASE("time lookup") {
    const ModelParams p = make_params(0.5, 3, 1, 1.0 / 32);
    FlowOptions o;
    o.max_steps = 3;
    const FlowTrace tr = run_flow(octagon(0.6, 0.3), p, o);
    REQUIRE(tr.stop == StopReason::MaxSteps);
    CHECK(step_at_time(tr, 0.0).j == 0);
    CHECK(step_at_time(tr, 1.5 * p.tau()).j == 1);
    CHECK(step_at_time(tr, 3 * p.tau()).j == 3);
    CHECK_THROWS_AS(step_at_time(tr, 4 * p.tau()), std::out_of_range);
}

TEST_CASE("gamma = 2 has no structured minimizer") {
    const ModelParams p = make_params(0.5, 2, 1, 1.0 / 16);
    CHECK_THROWS_AS(run_flow(octagon(0.5, 0.2), p, {}), ValidationError);
}

TEST_CASE("brute-force flow on a tiny shape matches the structured flow values") {
    const ModelParams p = make_params(0.6, 3, 0.1, 1.0 / 4);
    FlowOptions b;
    b.minimizer = MinimizerKind::Brute;
    b.max_steps = 2;
    b.width_threshold = 0;
    FlowOptions s = b;
    s.minimizer = MinimizerKind::Structured;
    InitialCondition ic;
    ic.octagon = OctagonSpec::from_box(0, 0.25, 0, 0);
    const FlowTrace tb = run_flow(ic, p, b);
    const FlowTrace ts = run_flow(ic, p, s);
    REQUIRE(tb.steps.size() >= 2);
    REQUIRE(ts.steps.size() >= 2);
    CHECK(tb.steps[1].value.total == doctest::Approx(ts.steps[1].value.total).epsilon(1e-12));
}

}  // TEST_SUITE
