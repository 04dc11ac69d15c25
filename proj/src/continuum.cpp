#include "beg/continuum.hpp"

#include "beg/errors.hpp"
#include "beg/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace beg {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kLengthTol = 1e-12;
// Near extinction every side crosses infinitely many resonances in finite time.
// Integration stops once the octagon has shrunk below this fraction of its start size.
constexpr double kVanishingFraction = 1e-3;

}  // namespace

std::string to_string(Branch b) { return b == Branch::Floor ? "floor" : "ceil"; }

bool is_resonant(double x) {
    const double n = std::round(x);
    return n >= 1 && std::abs(x - n) <= 1e-9 * std::max(1.0, x);
}

VelocityChoice velocity_parallel(double P, const ModelParams& params, Regime regime, Branch branch) {
    if (!(P > 0)) throw PreconditionError("parallel side length must be positive");
    const double x = 2.0 * params.zeta * (1.0 - params.k) / P;
    const double z = params.zeta;
    VelocityChoice v;
    v.resonant = is_resonant(x);
    const double n = std::round(x);
    if (regime == Regime::GammaLowRectangle) {
        if (v.resonant) {
            v.lo = (n - 1) / z;
            v.hi = (n + 1) / z;
        } else {
            v.lo = std::floor(x) / z;
            v.hi = std::ceil(x) / z;
        }
    } else if (v.resonant) {
        v.lo = (n - 1) / z;
        v.hi = n / z;
    } else {
        v.lo = v.hi = std::floor(x) / z;
    }
    v.value = branch == Branch::Floor ? v.lo : v.hi;
    return v;
}

VelocityChoice velocity_diagonal(double D, const ModelParams& params, Regime regime, Branch branch) {
    if (!(D > 0)) throw PreconditionError("diagonal side length must be positive");
    VelocityChoice v;
    if (regime != Regime::GammaHigh) return v;
    const double y = 2.0 * kSqrt2 * params.zeta * (1.0 - params.k) / D;
    const double c = kSqrt2 / (2.0 * params.zeta);
    v.resonant = is_resonant(y);
    if (v.resonant) {
        const double n = std::round(y);
        v.lo = c * (n - 1);
        v.hi = c * n;
    } else {
        v.lo = v.hi = c * std::floor(y);
    }
    v.value = branch == Branch::Floor ? v.lo : v.hi;
    return v;
}

OctagonSpec ContinuumTrace::at(double t) const {
    if (samples.empty()) throw std::out_of_range("empty continuum trace");
    if (t < 0 || t > end_time + 1e-12) throw std::out_of_range("time outside the integrated interval");
    auto it = std::upper_bound(samples.begin(), samples.end(), t,
                               [](double v, const ContinuumSample& s) { return v < s.t; });
    const ContinuumSample& s = *std::prev(it == samples.begin() ? std::next(it) : it);
    const double dt = std::max(0.0, t - s.t);
    OctagonSpec A = s.A;
    for (int i = 0; i < 4; ++i) {
        A.p[i] -= s.vP[i] * dt;
        A.d[i] -= s.vD[i] * dt;
    }
    return A;
}

namespace {

struct Rates {
    std::array<double, 4> P{}, D{};
};

// Larger of the two axis-parallel widths.
double extent(const OctagonSpec& A) { return std::max(A.p[0] + A.p[2], A.p[1] + A.p[3]); }

Rates length_rates(const std::array<double, 4>& vP, const std::array<double, 4>& vD) {
    Rates r;
    for (int i = 0; i < 4; ++i) {
        const int prev = (i + 3) % 4, next = (i + 1) % 4;
        r.P[i] = 2.0 * vP[i] - kSqrt2 * (vD[prev] + vD[i]);
        r.D[i] = 2.0 * vD[i] - kSqrt2 * (vP[i] + vP[next]);
    }
    return r;
}

// Next length, in the direction of motion, at which 2 zeta (1-k) c / L is an integer.
double next_threshold(double L, double rate, double scale) {
    const double x = scale / L;
    const bool res = is_resonant(x);
    if (rate < 0) {
        const double n = res ? std::round(x) + 1 : std::floor(x) + 1;
        return scale / n;
    }
    const double n = res ? std::round(x) - 1 : std::floor(x);
    return n >= 1 ? scale / n : INFINITY;
}

}  // namespace

ContinuumTrace integrate_flow(const OctagonSpec& A0, const ModelParams& params, double horizon, Branch branch) {
    params.validate();
    if (params.gamma == 2.0) throw ValidationError("the continuum flow is defined for gamma != 2 only");
    if (!(horizon >= 0)) throw ValidationError("horizon must be nonnegative");
    if (!A0.valid(1e-12)) throw ValidationError("initial octagon has a negative side length");
    const bool high = params.gamma > 2;
    const double scaleP = 2.0 * params.zeta * (1.0 - params.k);
    const double scaleD = kSqrt2 * scaleP;
    if (high) {
        for (double v : A0.parallel_lengths())
            if (v <= kLengthTol) throw ValidationError("the gamma > 2 flow needs a non-degenerate initial octagon");
        for (double v : A0.diagonal_lengths())
            if (v <= kLengthTol) throw ValidationError("the gamma > 2 flow needs a non-degenerate initial octagon");
    }

    ContinuumTrace tr;
    tr.params = params;
    tr.branch = branch;
    tr.horizon = horizon;
    OctagonSpec A = A0;
    double t = 0.0;
    std::string pending;
    std::array<bool, 8> was_sliding{};
    auto note = [&](const std::string& kind, int side) {
        tr.events.push_back({t, kind, side});
        if (!pending.empty()) pending += ";";
        pending += kind;
    };

    const double start_size = extent(A0);
    std::array<bool, 4> clamped{};
    for (int i = 0; i < 4; ++i) clamped[i] = !high && A.diagonal_lengths()[i] <= kLengthTol;

    int stalls = 0;
    while (true) {
        if (!high)
            for (int i = 0; i < 4; ++i)
                if (clamped[i]) A.d[i] = (A.p[i] + A.p[(i + 1) % 4]) / kSqrt2;
        const auto P = A.parallel_lengths();
        const auto D = A.diagonal_lengths();

        ContinuumSample sample;
        sample.t = t;
        sample.A = A;
        if (t >= horizon) {
            sample.events = pending;
            tr.samples.push_back(sample);
            tr.end_time = t;
            break;
        }

        const bool rectangle = !high && std::all_of(clamped.begin(), clamped.end(), [](bool c) { return c; });
        const Regime regime = high ? Regime::GammaHigh : rectangle ? Regime::GammaLowRectangle : Regime::GammaLowOctagon;

        std::array<VelocityChoice, 4> cP, cD;
        std::array<double, 4> vP{}, vD{};
        for (int i = 0; i < 4; ++i) {
            cP[i] = velocity_parallel(P[i], params, regime, branch);
            vP[i] = cP[i].value;
            if (high) {
                cD[i] = velocity_diagonal(D[i], params, regime, branch);
                vD[i] = cD[i].value;
            }
        }
        auto apply_clamps = [&] {
            if (!high)
                for (int i = 0; i < 4; ++i) vD[i] = clamped[i] ? (vP[i] + vP[(i + 1) % 4]) / kSqrt2 : 0.0;
        };
        apply_clamps();

        // Resonant sides: keep the branch endpoint only if the side then leaves the
        // resonance on the side where that endpoint is the velocity law.
        std::array<bool, 8> sliding{};
        for (int sweep = 0; sweep < 16; ++sweep) {
            bool changed = false;
            for (int s = 0; s < 8; ++s) {
                const bool is_p = s < 4;
                const int i = s % 4;
                const VelocityChoice& ch = is_p ? cP[i] : cD[i];
                if (!ch.resonant || regime == Regime::GammaLowRectangle || (!is_p && !high)) continue;
                double& v = is_p ? vP[i] : vD[i];
                auto rate_with = [&](double val) {
                    const double keep = v;
                    v = val;
                    apply_clamps();
                    const Rates r = length_rates(vP, vD);
                    v = keep;
                    apply_clamps();
                    return is_p ? r.P[i] : r.D[i];
                };
                const double r_lo = rate_with(ch.lo), r_hi = rate_with(ch.hi);
                const bool lo_ok = r_lo >= 0, hi_ok = r_hi <= 0;
                double pick;
                bool slide = false;
                const bool prefer_lo = branch == Branch::Floor;
                if (prefer_lo ? lo_ok : hi_ok) pick = prefer_lo ? ch.lo : ch.hi;
                else if (prefer_lo ? hi_ok : lo_ok) pick = prefer_lo ? ch.hi : ch.lo;
                else if (r_hi != r_lo) {
                    pick = ch.lo - r_lo * (ch.hi - ch.lo) / (r_hi - r_lo);
                    slide = true;
                } else {
                    pick = ch.value;
                }
                if (pick != v || slide != sliding[s]) changed = true;
                v = pick;
                sliding[s] = slide;
                apply_clamps();
            }
            if (!changed) break;
        }
        for (int s = 0; s < 8; ++s) {
            if (sliding[s] && !was_sliding[s]) note("sliding", s + 1);
        }
        was_sliding = sliding;

        sample.vP = vP;
        sample.vD = vD;
        sample.events = pending;
        pending.clear();
        tr.samples.push_back(sample);

        const Rates r = length_rates(vP, vD);
        double dt = horizon - t;
        for (int i = 0; i < 4; ++i) {
            if (!sliding[i] && r.P[i] != 0) {
                if (r.P[i] < 0) dt = std::min(dt, P[i] / -r.P[i]);
                const double L = next_threshold(P[i], r.P[i], scaleP);
                if (std::isfinite(L)) dt = std::min(dt, (L - P[i]) / r.P[i]);
            }
            if (high && !sliding[4 + i] && r.D[i] != 0) {
                if (r.D[i] < 0) dt = std::min(dt, D[i] / -r.D[i]);
                const double L = next_threshold(D[i], r.D[i], scaleD);
                if (std::isfinite(L)) dt = std::min(dt, (L - D[i]) / r.D[i]);
            }
            if (!high && !clamped[i] && r.D[i] < 0) dt = std::min(dt, D[i] / -r.D[i]);
        }
        dt = std::max(0.0, dt);
        stalls = dt == 0.0 ? stalls + 1 : 0;
        if (stalls > 64) throw std::logic_error("continuum integration makes no progress");

        for (int i = 0; i < 4; ++i) {
            A.p[i] -= vP[i] * dt;
            A.d[i] -= vD[i] * dt;
        }
        t = (horizon - t - dt) <= 1e-15 * std::max(1.0, horizon) ? horizon : t + dt;

        const auto P1 = A.parallel_lengths();
        const auto D1 = A.diagonal_lengths();
        bool degenerate = false;
        for (int i = 0; i < 4; ++i) {
            if (P1[i] <= kLengthTol) {
                note("side-collapse", i + 1);
                degenerate = true;
            } else if (!sliding[i] && is_resonant(scaleP / P1[i]) && !is_resonant(scaleP / P[i])) {
                note("resonance-crossed", i + 1);
            }
            if (high) {
                if (D1[i] <= kLengthTol) {
                    note("diagonal-vanishes", i + 5);
                    degenerate = true;
                } else if (!sliding[4 + i] && is_resonant(scaleD / D1[i]) && !is_resonant(scaleD / D[i])) {
                    note("resonance-crossed", i + 5);
                }
            } else if (!clamped[i] && D1[i] <= kLengthTol) {
                note("diagonal-vanishes", i + 5);
                clamped[i] = true;
            }
        }
        if (!degenerate && extent(A) < kVanishingFraction * start_size) {
            note("vanishing-size", 0);
            degenerate = true;
        }
        if (degenerate) {
            if (!high)
                for (int i = 0; i < 4; ++i)
                    if (clamped[i]) A.d[i] = (A.p[i] + A.p[(i + 1) % 4]) / kSqrt2;
            ContinuumSample last;
            last.t = t;
            last.A = A;
            last.events = pending;
            tr.samples.push_back(last);
            tr.end_time = t;
            break;
        }
    }
    return tr;
}

std::vector<CompareRow> compare_discrete_continuum(const std::vector<FlowTrace>& traces,
                                                   const ContinuumTrace& continuum) {
    std::vector<CompareRow> rows;
    for (const FlowTrace& tr : traces) {
        const ModelParams& a = tr.params;
        const ModelParams& b = continuum.params;
        if (a.k != b.k || a.gamma != b.gamma || a.zeta != b.zeta)
            throw ValidationError("discrete and continuum runs use different model parameters");
        CompareRow row;
        row.epsilon = a.epsilon;
        const double tau = tr.tau();
        const int J = int(std::floor(continuum.end_time / tau + 1e-9));
        row.expected = J + 1;
        for (int j = 0; j <= J; ++j) {
            const double t = j * tau;
            if (j > tr.last_step() && tr.stop != StopReason::PinnedSteady) break;
            const Region I = step_at_time(tr, t).u.plus();
            ++row.samples;
            if (I.empty()) {
                // The discrete set vanished while the continuum octagon is still there.
                row.sup_hausdorff = std::numeric_limits<double>::infinity();
                break;
            }
            row.sup_hausdorff = std::max(row.sup_hausdorff, hausdorff_distance(I, continuum.at(t), a.epsilon));
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace beg
