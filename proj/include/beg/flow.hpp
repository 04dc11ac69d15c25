#pragma once

#include "beg/dissipation.hpp"
#include "beg/energy.hpp"
#include "beg/lattice.hpp"
#include "beg/minimize.hpp"
#include "beg/octagon.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace beg {

enum class MinimizerKind { Brute, Structured };
enum class StopReason { MaxSteps, SideCollapse, WidthBelowThreshold, PinnedSteady, PreconditionViolated };

std::string to_string(MinimizerKind k);
std::string to_string(StopReason r);

struct InitialCondition {
    OctagonSpec octagon;
    // Number of surfactant cells; empty means exactly the outer boundary of I_0.
    std::optional<long> surfactant_count;
};

struct FlowOptions {
    int max_steps = 100;
    MinimizerKind minimizer = MinimizerKind::Structured;
    // Stop once a parallel side of I_j has fewer cells than this.
    int width_threshold = 4;
    int brute_dilation = 0;  // window for the exhaustive minimizer: bbox(I u Z) dilated by this
    std::optional<std::uint64_t> seed;
    bool audit = false;
    double stage_exponent = 1.0 / 8.0;  // passed to the low-gamma minimizer
};

struct FlowStep {
    int j = 0;
    double t = 0.0;
    SpinGrid u;
    StepFunctionalValue value;  // for j = 0: energy only
    std::array<int, 4> side_cells{0, 0, 0, 0};  // parallel side counts of the hull
    std::array<int, 4> diag_steps{0, 0, 0, 0};  // diagonal unit steps of the hull
    std::array<double, 4> P{0, 0, 0, 0};
    std::array<double, 4> D{0, 0, 0, 0};
    Displacements disp;  // motion from step j-1 to j
    std::string shape;   // classification of I_j, "empty" after collapse
    int stage = 0;
    std::array<std::pair<int, int>, 4> alpha_band{};
    bool outside_theory = false;  // gamma > 2 with a vanished diagonal
    std::int64_t n_zero = 0;
};

struct AuditEntry {
    int j = 0;
    CandidateRecord record;
};

struct FlowTrace {
    ModelParams params;
    FlowOptions options;
    InitialCondition initial;
    long surfactant_count = 0;
    std::vector<FlowStep> steps;
    StopReason stop = StopReason::MaxSteps;
    std::string stop_detail;
    std::vector<AuditEntry> audit;

    double tau() const { return params.tau(); }
    int last_step() const { return steps.empty() ? 0 : steps.back().j; }
};

// Initial configuration: I_0 = discretization of the octagon, Z_0 its outer
// boundary, grown by layered placement when a larger count is requested.
SpinGrid initial_configuration(const InitialCondition& init, const ModelParams& params);

FlowTrace run_flow(const InitialCondition& init, const ModelParams& params, const FlowOptions& options);

// I at step floor(t / tau); t must lie in [0, last_step * tau]. A run that
// stopped pinned is constant afterwards and accepts any t >= 0.
Region region_at_time(const FlowTrace& trace, double t);
const FlowStep& step_at_time(const FlowTrace& trace, double t);

struct SideRow {
    double t = 0.0;
    std::array<double, 4> P{0, 0, 0, 0};
    std::array<double, 4> D{0, 0, 0, 0};
    std::int64_t n_zero = 0;
    double energy = 0.0;
    bool classifiable = true;
};
std::vector<SideRow> extract_side_series(const FlowTrace& trace);

}  // namespace beg
