#pragma once

#include "beg/energy.hpp"
#include "beg/flow.hpp"
#include "beg/octagon.hpp"

#include <array>
#include <string>
#include <vector>

namespace beg {

enum class Branch { Floor, Ceil };
enum class Regime { GammaHigh, GammaLowOctagon, GammaLowRectangle };

std::string to_string(Branch b);

// Admissible inward velocities of one side; `value` is the branch representative.
struct VelocityChoice {
    double lo = 0.0;
    double hi = 0.0;
    double value = 0.0;
    bool resonant = false;
};

// |x - round(x)| small relative to x, with x = 2 zeta (1-k) / length.
bool is_resonant(double x);

VelocityChoice velocity_parallel(double P, const ModelParams& params, Regime regime, Branch branch);
VelocityChoice velocity_diagonal(double D, const ModelParams& params, Regime regime, Branch branch = Branch::Floor);

struct ContinuumEvent {
    double t = 0.0;
    std::string kind;  // resonance-crossed, diagonal-vanishes, side-collapse, sliding
    int side = 0;      // 1..4 for P sides, 5..8 for D sides
};

struct ContinuumSample {
    double t = 0.0;
    OctagonSpec A;
    // Support-value decrease rates on the segment starting here.
    std::array<double, 4> vP{0, 0, 0, 0};
    std::array<double, 4> vD{0, 0, 0, 0};
    std::string events;  // kinds recorded at this instant, ';'-separated
};

struct ContinuumTrace {
    ModelParams params;
    Branch branch = Branch::Floor;
    double horizon = 0.0;
    double end_time = 0.0;  // horizon, or the first degeneracy time for gamma > 2
    std::vector<ContinuumSample> samples;
    std::vector<ContinuumEvent> events;

    // Octagon at time t in [0, end_time], exact on the piecewise-linear segments.
    OctagonSpec at(double t) const;
};

// Event-driven integration. Between events every support value moves linearly.
// At a resonance the branch endpoint is taken when the side then leaves the
// resonant value in the matching direction; otherwise the side slides with the
// velocity that keeps its length fixed.
ContinuumTrace integrate_flow(const OctagonSpec& A0, const ModelParams& params, double horizon, Branch branch);

struct CompareRow {
    double epsilon = 0.0;
    double sup_hausdorff = 0.0;
    int samples = 0;
    int expected = 0;  // step times in [0, end_time]; fewer samples means the discrete run stopped early
};

// sup over t = j tau in [0, end_time] of the Hausdorff distance between each
// discrete trace and the continuum flow. Rows keep the order of `traces`.
// A discrete set that vanishes before end_time counts as infinitely far.
std::vector<CompareRow> compare_discrete_continuum(const std::vector<FlowTrace>& traces,
                                                   const ContinuumTrace& continuum);

}  // namespace beg
