#include "beg/flow.hpp"

#include "beg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace beg {

std::string to_string(MinimizerKind k) { return k == MinimizerKind::Brute ? "brute" : "structured"; }

std::string to_string(StopReason r) {
    switch (r) {
        case StopReason::MaxSteps: return "max-steps";
        case StopReason::SideCollapse: return "side-collapse";
        case StopReason::WidthBelowThreshold: return "width-below-threshold";
        case StopReason::PinnedSteady: return "pinned-steady";
        case StopReason::PreconditionViolated: return "precondition-violated";
    }
    return "unknown";
}

namespace {

void describe(FlowStep& s, long C, const ModelParams& params) {
    const Region I = s.u.plus();
    s.n_zero = std::int64_t(s.u.zero().size());
    if (I.empty()) {
        s.shape = "empty";
        return;
    }
    const double eps = params.epsilon;
    const OctagonClassification cls = classify_shape(I, C, eps);
    s.shape = to_string(cls.kind);
    s.side_cells = cls.hull.side_counts();
    s.diag_steps = cls.hull.diagonal_steps();
    for (int i = 0; i < 4; ++i) {
        s.P[i] = eps * s.side_cells[i];
        s.D[i] = std::sqrt(2.0) * eps * s.diag_steps[i];
    }
    if (params.gamma > 2)
        s.outside_theory = std::any_of(s.diag_steps.begin(), s.diag_steps.end(), [](int m) { return m == 0; });
}

}  // namespace

SpinGrid initial_configuration(const InitialCondition& init, const ModelParams& params) {
    const double eps = params.epsilon;
    const Region I0 = discretize_octagon(init.octagon, eps);
    if (I0.empty()) throw ValidationError("initial octagon contains no lattice points at this spacing");
    Region Z0;
    if (init.surfactant_count) {
        try {
            Z0 = place_surfactant(I0, *init.surfactant_count);
        } catch (const PreconditionError& e) {
            throw ValidationError(std::string("initial surfactant: ") + e.what());
        }
    } else {
        Z0 = outer_boundary(I0);
    }
    return SpinGrid::from_phases(I0, Z0, eps, 1);
}

FlowTrace run_flow(const InitialCondition& init, const ModelParams& params, const FlowOptions& options) {
    params.validate();
    if (options.minimizer == MinimizerKind::Structured && params.gamma == 2.0)
        throw ValidationError("structured minimizers are defined for gamma != 2 only");

    FlowTrace trace;
    trace.params = params;
    trace.options = options;
    trace.initial = init;

    FlowStep s0;
    s0.u = initial_configuration(init, params);
    trace.surfactant_count = long(s0.u.zero().size());
    s0.value.energy = total_energy(s0.u, params);
    s0.value.total = s0.value.energy;
    describe(s0, trace.surfactant_count, params);
    trace.steps.push_back(std::move(s0));

    const double tau = params.tau();
    trace.stop = StopReason::MaxSteps;
    for (int j = 1; j <= options.max_steps; ++j) {
        const FlowStep& prev = trace.steps.back();
        const int narrowest = *std::min_element(prev.side_cells.begin(), prev.side_cells.end());
        if (narrowest < options.width_threshold) {
            trace.stop = StopReason::WidthBelowThreshold;
            trace.stop_detail = "parallel side with " + std::to_string(narrowest) + " cells at step " +
                                std::to_string(prev.j);
            break;
        }

        FlowStep next;
        next.j = j;
        next.t = j * tau;
        try {
            if (options.minimizer == MinimizerKind::Brute) {
                const RectSpec window = default_search_window(prev.u, options.brute_dilation);
                BruteForceResult r = brute_force_minimizer(prev.u, params, window);
                next.u = std::move(r.u);
                next.value = r.value;
                const Region I_new = next.u.plus();
                if (!I_new.empty())
                    next.disp = OctagonOffsets::hull(prev.u.plus()).displacement_to(OctagonOffsets::hull(I_new));
            } else {
                StructuredOptions so;
                so.audit = options.audit;
                so.placement_seed = options.seed;
                so.stage_exponent = options.stage_exponent;
                StructuredResult r = params.gamma > 2 ? structured_minimizer_gamma_high(prev.u, params, so)
                                                      : structured_minimizer_gamma_low(prev.u, params, so);
                next.u = std::move(r.u);
                next.value = r.value;
                next.disp = r.disp;
                next.stage = r.stage;
                next.alpha_band = r.alpha_band;
                for (const auto& rec : r.audit) trace.audit.push_back({j, rec});
            }
        } catch (const PreconditionError& e) {
            trace.stop = StopReason::PreconditionViolated;
            trace.stop_detail = std::string(e.what()) + " at step " + std::to_string(j);
            break;
        }
        describe(next, trace.surfactant_count, params);
        const bool collapsed = next.u.plus().empty();
        const bool pinned = next.u.same_configuration(prev.u);
        trace.steps.push_back(std::move(next));
        if (collapsed) {
            trace.stop = StopReason::SideCollapse;
            trace.stop_detail = "phase-one set vanished at step " + std::to_string(j);
            break;
        }
        if (pinned) {
            trace.stop = StopReason::PinnedSteady;
            trace.stop_detail = "configuration unchanged at step " + std::to_string(j);
            break;
        }
    }
    return trace;
}

const FlowStep& step_at_time(const FlowTrace& trace, double t) {
    if (trace.steps.empty()) throw std::out_of_range("empty trace");
    if (!(t >= 0)) throw std::out_of_range("time must be nonnegative");
    const double j_real = std::floor(t / trace.tau() + 1e-9);
    const int last = trace.last_step();
    if (j_real > last) {
        if (trace.stop == StopReason::PinnedSteady) return trace.steps.back();
        throw std::out_of_range("time " + std::to_string(t) + " lies beyond the recorded steps");
    }
    return trace.steps[std::size_t(j_real)];
}

Region region_at_time(const FlowTrace& trace, double t) { return step_at_time(trace, t).u.plus(); }

std::vector<SideRow> extract_side_series(const FlowTrace& trace) {
    std::vector<SideRow> rows;
    rows.reserve(trace.steps.size());
    for (const FlowStep& s : trace.steps) {
        SideRow r;
        r.t = s.t;
        r.P = s.P;
        r.D = s.D;
        r.n_zero = s.n_zero;
        r.energy = s.value.energy;
        r.classifiable = s.shape != to_string(ShapeKind::StaircaseOther);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace beg
