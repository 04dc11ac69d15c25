#include "beg/minimize.hpp"

#include "beg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace beg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double tie_tolerance(double best) { return 1e-11 * std::max(1.0, std::abs(best)); }

void require_matching_spacing(const SpinGrid& u, const ModelParams& params) {
    if (u.epsilon() != params.epsilon)
        throw PreconditionError("lattice spacing of the configuration does not match the model parameters");
}

}  // namespace

RectSpec default_search_window(const SpinGrid& u_old, int dilation) {
    const Region IZ = set_union(u_old.plus(), u_old.zero());
    if (IZ.empty()) return u_old.window();
    return bounding_rect(IZ).dilated(dilation);
}

// ---------------------------------------------------------------------------
// Exhaustive search

BruteForceResult brute_force_minimizer(const SpinGrid& u_old, const ModelParams& params, const RectSpec& window,
                                       const BruteForceOptions& options) {
    return brute_force_minimizer(u_old, params, Region::rectangle(window), options);
}

BruteForceResult brute_force_minimizer(const SpinGrid& u_old, const ModelParams& params, const Region& free_cells,
                                       const BruteForceOptions& options) {
    require_matching_spacing(u_old, params);
    const Region I_old = u_old.plus();
    const Region Z_old = u_old.zero();
    if (I_old.empty()) throw PreconditionError("exhaustive search needs a nonempty phase-one set");

    const std::size_t n = free_cells.size();
    std::uint64_t configurations = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (configurations > options.cap / 3)
            throw PreconditionError("exhaustive search over " + std::to_string(n) +
                                    " cells exceeds the configuration cap");
        configurations *= 3;
    }
    if (configurations > options.cap)
        throw PreconditionError("exhaustive search exceeds the configuration cap");

    RectSpec box = u_old.window();
    if (n > 0) box = box.united(bounding_rect(free_cells));
    box = box.dilated(1);
    const int W = box.width();
    auto idx = [&](Coord c) { return std::size_t(c.y - box.ymin) * std::size_t(W) + std::size_t(c.x - box.xmin); };

    std::vector<int> spin(std::size_t(box.area()), -1);
    for (int y = box.ymin; y <= box.ymax; ++y)
        for (int x = box.xmin; x <= box.xmax; ++x) spin[idx({x, y})] = u_old.at({x, y});
    for (Coord c : free_cells) spin[idx(c)] = -1;

    // Integer state: bond classes, bulk distance sum, surfactant count.
    std::int64_t opposite = 0, mixed = 0;
    auto classify = [&](int st, int sign) {
        if (st == -1) opposite += sign;
        else if (st == 0) mixed += sign;
    };
    for (int y = box.ymin; y <= box.ymax; ++y)
        for (int x = box.xmin; x <= box.xmax; ++x) {
            const int s = spin[idx({x, y})];
            if (x < box.xmax) classify(s * spin[idx({x + 1, y})], 1);
            if (y < box.ymax) classify(s * spin[idx({x, y + 1})], 1);
        }

    const BoundaryDistanceField field(I_old, box);
    std::vector<std::size_t> cell_index(n);
    std::vector<std::array<std::size_t, 4>> nbr(n);
    std::vector<int> weight(n);
    std::vector<char> in_old(n);
    std::int64_t S = 0;
    std::int64_t nz = std::int64_t(Z_old.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Coord c = free_cells.cells()[i];
        cell_index[i] = idx(c);
        const auto nb = neighbors(c);
        for (int j = 0; j < 4; ++j) nbr[i][j] = idx(nb[j]);
        weight[i] = field.at(c);
        in_old[i] = I_old.contains(c) ? 1 : 0;
        if (in_old[i]) S += weight[i];
        if (u_old.at(c) == 0) --nz;
    }
    const std::int64_t z_old = std::int64_t(Z_old.size());

    const double eps = params.epsilon, w = 1.0 - params.k, tau = params.tau();
    const double c_d1 = eps * eps * eps / tau, c_d0 = std::pow(eps, params.gamma) / tau;
    auto functional = [&] {
        return eps * (2.0 * double(opposite) + w * double(mixed)) + c_d1 * double(S) +
               c_d0 * double(std::llabs(nz - z_old));
    };

    auto assign = [&](std::size_t i, int t) {
        const std::size_t ci = cell_index[i];
        const int s = spin[ci];
        for (std::size_t q : nbr[i]) {
            classify(s * spin[q], -1);
            classify(t * spin[q], 1);
        }
        spin[ci] = t;
        const bool was_diff = (s == 1) != bool(in_old[i]);
        const bool is_diff = (t == 1) != bool(in_old[i]);
        S += (is_diff ? weight[i] : 0) - (was_diff ? weight[i] : 0);
        nz += (t == 0 ? 1 : 0) - (s == 0 ? 1 : 0);
    };

    std::vector<int> digit(n, 0), best_digit(n, 0);
    double best = functional();
    std::uint64_t evaluated = 1;
    while (true) {
        std::size_t i = n;
        while (i > 0 && digit[i - 1] == 2) {
            digit[i - 1] = 0;
            assign(i - 1, -1);
            --i;
        }
        if (i == 0) break;
        ++digit[i - 1];
        assign(i - 1, digit[i - 1] - 1);
        ++evaluated;
        const double F = functional();
        if (F < best - 1e-12 * std::max(1.0, std::abs(best))) {
            best = F;
            best_digit = digit;
        }
    }

    SpinGrid u = u_old.with_window(box);
    for (std::size_t i = 0; i < n; ++i) u.set(free_cells.cells()[i], best_digit[i] - 1);
    BruteForceResult out;
    out.value = step_functional(u, u_old, params);
    out.u = std::move(u);
    out.evaluated = evaluated;
    return out;
}

// ---------------------------------------------------------------------------
// Surfactant placement

double pinning_threshold(long C, double epsilon, double mu) {
    return std::max(2.0 * epsilon * std::sqrt(double(C)), std::pow(epsilon, mu));
}

Region place_surfactant(const Region& I, long C, std::optional<std::uint64_t> seed) {
    if (I.empty()) throw PreconditionError("surfactant placement needs a nonempty phase-one set");
    const Region ring = outer_boundary(I);
    if (C < long(ring.size()))
        throw PreconditionError("surfactant count " + std::to_string(C) + " cannot ring the phase-one set (needs " +
                                std::to_string(ring.size()) + ")");

    std::vector<Coord> Z(ring.begin(), ring.end());
    long remaining = C - long(ring.size());
    // Corner layers never leave the bounding box of I u ring, so one mask suffices.
    CellMask G(set_union(I, ring), 1);
    RectSpec grown = bounding_rect(set_union(I, ring));
    std::mt19937_64 rng(seed.value_or(0));

    while (remaining > 0) {
        std::vector<Coord> layer;
        for (int y = grown.ymin; y <= grown.ymax; ++y)
            for (int x = grown.xmin; x <= grown.xmax; ++x)
                if (!G.test({x, y}) && G.count_neighbours({x, y}) >= 2) layer.push_back({x, y});

        if (layer.empty()) {
            // G fills its bounding rectangle: stack rows below it, each filled from the left.
            RectSpec rect = grown;
            while (remaining > 0) {
                const int y = rect.ymin - 1;
                const int take = int(std::min<long>(rect.width(), remaining));
                for (int j = 0; j < take; ++j) Z.push_back({rect.xmin + j, y});
                remaining -= take;
                rect.ymin = y;
            }
            break;
        }
        if (long(layer.size()) > remaining) {
            if (seed) std::shuffle(layer.begin(), layer.end(), rng);
            layer.resize(std::size_t(remaining));
        }
        for (Coord c : layer) {
            G.set(c);
            Z.push_back(c);
        }
        remaining -= long(layer.size());
    }
    return Region(std::move(Z));
}

// ---------------------------------------------------------------------------
// Structured search, gamma > 2

namespace {

// One entry of a side table: three free displacements of one half of the octagon.
struct HalfEntry {
    bool ok = false;
    double value = kInf;  // contribution to the functional
    std::int64_t s = 0;   // prefix-sum contribution to the kept bulk weight
};

struct Table3 {
    int n0 = 0, n1 = 0, n2 = 0;
    std::vector<HalfEntry> e;
    void resize(int a, int b, int c) {
        n0 = a;
        n1 = b;
        n2 = c;
        e.assign(std::size_t(a) * b * c, HalfEntry{});
    }
    HalfEntry& at(int i, int j, int k) { return e[(std::size_t(i) * n1 + j) * n2 + k]; }
    const HalfEntry& at(int i, int j, int k) const { return e[(std::size_t(i) * n1 + j) * n2 + k]; }
};

using Tuple8 = std::array<int, 8>;  // alpha1..4, beta1..4

}  // namespace

StructuredResult structured_minimizer_gamma_high(const SpinGrid& u_old, const ModelParams& params,
                                                 const StructuredOptions& options) {
    if (!(params.gamma > 2)) throw PreconditionError("the wetted-octagon search applies to gamma > 2");
    require_matching_spacing(u_old, params);
    const Region I_old = u_old.plus();
    const Region Z_old = u_old.zero();
    if (I_old.empty()) throw PreconditionError("structured search needs a nonempty phase-one set");
    const OctagonOffsets O = OctagonOffsets::hull(I_old);
    if (O.cells() != I_old) throw PreconditionError("phase-one set is not a discrete octagon");
    if (!outer_boundary(I_old).is_subset_of(Z_old))
        throw PreconditionError("phase-one set is not wetted by the surfactant");

    const auto c = O.side_counts();
    const auto m = O.diagonal_steps();
    for (int v : c)
        if (v < options.min_side_cells) throw PreconditionError("a parallel side is shorter than the width threshold");

    const double eps = params.epsilon, w = 1.0 - params.k, zeta = params.zeta, tau = params.tau();
    const double cE = eps * w;
    const double cD = eps * eps * eps / tau;
    const double cZ = std::pow(eps, params.gamma) / tau;
    const std::int64_t z_old = std::int64_t(Z_old.size());
    const int n_h = O.ymax - O.ymin + 1, n_v = O.xmax - O.xmin + 1;
    int m_sum = 0;
    for (int v : m) m_sum += v;

    // Row prefix sums of d1 over I_old: pre[r][j] = sum of the first j cells of row ymin + r.
    const BoundaryDistanceField field(I_old, O.box());
    std::vector<std::vector<std::int64_t>> pre(static_cast<std::size_t>(n_h));
    std::int64_t W_tot = 0;
    for (int y = O.ymin; y <= O.ymax; ++y) {
        auto& row = pre[std::size_t(y - O.ymin)];
        const int lo = O.row_lo(y), hi = O.row_hi(y);
        row.assign(std::size_t(hi - lo + 2), 0);
        for (int x = lo; x <= hi; ++x) row[std::size_t(x - lo + 1)] = row[std::size_t(x - lo)] + field.at({x, y});
        W_tot += row.back();
    }
    // Weight of the I_old cells in row y with x <= t.
    auto prefix = [&](int y, int t) -> std::int64_t {
        const auto& row = pre[std::size_t(y - O.ymin)];
        const int j = t - O.row_lo(y) + 1;
        if (j <= 0) return 0;
        return row[std::size_t(std::min<int>(j, int(row.size()) - 1))];
    };

    // Search ranges.
    std::array<int, 4> amax{}, bmax{};
    for (int i = 0; i < 4; ++i) amax[i] = int(std::ceil(2.0 * zeta * w / (eps * c[i]))) + 2;
    amax[0] = std::min(amax[0], n_h - 1);
    amax[2] = std::min(amax[2], n_h - 1);
    amax[1] = std::min(amax[1], n_v - 1);
    amax[3] = std::min(amax[3], n_v - 1);
    for (int i = 0; i < 4; ++i) {
        const int j = (i + 1) % 4;
        int b = std::min(c[i] + 2 * amax[i] - 1, c[j] + 2 * amax[j] - 1);
        if (m[i] > 0) b = std::min(b, int(std::ceil(2.0 * zeta * w / (eps * m[i]))) + 2);
        bmax[i] = std::max(0, b);
    }

    StructuredResult out;
    for (int i = 0; i < 4; ++i) out.alpha_band[i] = {0, amax[i]};

    const int A0 = amax[0] + 1, A1 = amax[1] + 1, A2 = amax[2] + 1, A3 = amax[3] + 1;
    const int B0 = bmax[0] + 1, B1 = bmax[1] + 1, B2 = bmax[2] + 1, B3 = bmax[3] + 1;

    auto base_value = [&](int a1, int a3) {
        const int nh = n_h - a1 - a3;
        const int csum = m_sum - 2 * a1 - 2 * a3;
        const double E = cE * (6.0 * (nh + n_v) - 2.0 * csum + 4.0);
        const std::int64_t zk = 2 * std::int64_t(nh + n_v) - csum;
        return E + cZ * double(z_old - zk) + cD * double(W_tot);
    };

    Table3 left, right;
    // Left: (alpha2, beta1, beta2). Right: (alpha4, beta4, beta3).
    auto build_tables = [&](int a1, int a3) {
        const int y0 = O.ymin + a1, y1 = O.ymax - a3;
        left.resize(A1, B0, B1);
        for (int a2 = 0; a2 < A1; ++a2)
            for (int b1 = 0; b1 < B0; ++b1)
                for (int b2 = 0; b2 < B1; ++b2) {
                    if (m[0] + b1 - a1 - a2 < 0 || m[1] + b2 - a2 - a3 < 0 || c[1] + 2 * a2 - b1 - b2 < 1) continue;
                    std::int64_t s = 0;
                    for (int y = y0; y <= y1; ++y) {
                        const int L = std::max({O.xmin + a2, O.smin + b1 - y, O.dmin + b2 + y});
                        s += prefix(y, L - 1);
                    }
                    HalfEntry& e = left.at(a2, b1, b2);
                    e.ok = true;
                    e.s = s;
                    e.value = cE * (-2.0 * (a2 + b1 + b2)) + cZ * double(b1 + b2) + cD * double(s);
                }
        right.resize(A3, B3, B2);
        for (int a4 = 0; a4 < A3; ++a4)
            for (int b4 = 0; b4 < B3; ++b4)
                for (int b3 = 0; b3 < B2; ++b3) {
                    if (m[2] + b3 - a3 - a4 < 0 || m[3] + b4 - a4 - a1 < 0 || c[3] + 2 * a4 - b3 - b4 < 1) continue;
                    std::int64_t s = 0;
                    for (int y = y0; y <= y1; ++y) {
                        const int R = std::min({O.xmax - a4, O.smax - b3 - y, O.dmax - b4 + y});
                        s += prefix(y, R);
                    }
                    HalfEntry& e = right.at(a4, b4, b3);
                    e.ok = true;
                    e.s = s;
                    e.value = cE * (-2.0 * (a4 + b3 + b4)) + cZ * double(b3 + b4) - cD * double(s);
                }
    };

    // Minimum over the pair (alpha1, alpha3) with the remaining six free.
    auto pair_minimum = [&](int a1, int a3) {
        std::vector<double> bestL(std::size_t(B0) * B1, kInf), bestR(std::size_t(B3) * B2, kInf);
        for (int a2 = 0; a2 < A1; ++a2)
            for (int b1 = 0; b1 < B0; ++b1)
                for (int b2 = 0; b2 < B1; ++b2)
                    if (const auto& e = left.at(a2, b1, b2); e.ok)
                        bestL[std::size_t(b1) * B1 + b2] = std::min(bestL[std::size_t(b1) * B1 + b2], e.value);
        for (int a4 = 0; a4 < A3; ++a4)
            for (int b4 = 0; b4 < B3; ++b4)
                for (int b3 = 0; b3 < B2; ++b3)
                    if (const auto& e = right.at(a4, b4, b3); e.ok)
                        bestR[std::size_t(b4) * B2 + b3] = std::min(bestR[std::size_t(b4) * B2 + b3], e.value);
        // Prefix minimum over beta4 <= a, beta3 <= b.
        for (int b4 = 0; b4 < B3; ++b4)
            for (int b3 = 0; b3 < B2; ++b3) {
                double& v = bestR[std::size_t(b4) * B2 + b3];
                if (b4 > 0) v = std::min(v, bestR[std::size_t(b4 - 1) * B2 + b3]);
                if (b3 > 0) v = std::min(v, bestR[std::size_t(b4) * B2 + b3 - 1]);
            }
        double best = kInf;
        for (int b1 = 0; b1 < B0; ++b1)
            for (int b2 = 0; b2 < B1; ++b2) {
                const double l = bestL[std::size_t(b1) * B1 + b2];
                if (l == kInf) continue;
                const int a = std::min(c[0] + 2 * a1 - 1 - b1, B3 - 1);
                const int b = std::min(c[2] + 2 * a3 - 1 - b2, B2 - 1);
                if (a < 0 || b < 0) continue;
                best = std::min(best, l + bestR[std::size_t(a) * B2 + b]);
            }
        return best;
    };

    auto pair_ok = [&](int a1, int a3) { return a1 + a3 <= n_h - 1; };

    std::vector<double> pair_min(std::size_t(A0) * A2, kInf);
    double F_star = kInf;
    for (int a1 = 0; a1 < A0; ++a1)
        for (int a3 = 0; a3 < A2; ++a3) {
            if (!pair_ok(a1, a3)) continue;
            build_tables(a1, a3);
            const double v = base_value(a1, a3) + pair_minimum(a1, a3);
            pair_min[std::size_t(a1) * A2 + a3] = v;
            F_star = std::min(F_star, v);

            if (options.audit) {
                const int nh = n_h - a1 - a3;
                for (int a2 = 0; a2 < A1; ++a2)
                    for (int b1 = 0; b1 < B0; ++b1)
                        for (int b2 = 0; b2 < B1; ++b2) {
                            const auto& L = left.at(a2, b1, b2);
                            if (!L.ok) continue;
                            for (int a4 = 0; a4 < A3; ++a4)
                                for (int b4 = 0; b4 < B3; ++b4)
                                    for (int b3 = 0; b3 < B2; ++b3) {
                                        const auto& R = right.at(a4, b4, b3);
                                        if (!R.ok || b1 + b4 > c[0] + 2 * a1 - 1 || b2 + b3 > c[2] + 2 * a3 - 1)
                                            continue;
                                        if (out.audit.size() >= options.audit_limit)
                                            throw PreconditionError("audit candidate limit exceeded");
                                        const int nv = n_v - a2 - a4;
                                        const int csum = m_sum - 2 * (a1 + a2 + a3 + a4) + b1 + b2 + b3 + b4;
                                        CandidateRecord rec;
                                        rec.disp.alpha = {a1, a2, a3, a4};
                                        rec.disp.beta = {b1, b2, b3, b4};
                                        rec.energy = cE * (6.0 * (nh + nv) - 2.0 * csum + 4.0);
                                        rec.d1 = eps * eps * eps * double(W_tot - R.s + L.s);
                                        rec.d0 = z_old - (2 * std::int64_t(nh + nv) - csum);
                                        rec.total = combine_functional(rec.energy, rec.d1, rec.d0, params);
                                        rec.perimeter = 2.0 * eps * (nh + nv);
                                        out.audit.push_back(rec);
                                    }
                        }
            }
        }

    const double F_empty = cD * double(W_tot) + cZ * double(z_old);
    if (options.audit && options.include_empty) {
        CandidateRecord rec;
        rec.empty = true;
        rec.d1 = eps * eps * eps * double(W_tot);
        rec.d0 = z_old;
        rec.total = combine_functional(0.0, rec.d1, rec.d0, params);
        out.audit.push_back(rec);
    }

    if (F_star == kInf && !options.include_empty) throw PreconditionError("no nonempty candidate in the search range");
    const bool collapse =
        options.include_empty && (F_star == kInf || F_empty < F_star - tie_tolerance(F_star));
    double F_struct = F_empty;
    Region I_new;
    if (!collapse) {
        // Lexicographically smallest tuple attaining the minimum within tolerance.
        const double T = F_star + tie_tolerance(F_star);
        std::optional<Tuple8> winner;
        double winner_value = kInf;
        for (int a1 = 0; a1 < A0; ++a1)
            for (int a3 = 0; a3 < A2; ++a3) {
                if (!pair_ok(a1, a3) || pair_min[std::size_t(a1) * A2 + a3] > T) continue;
                build_tables(a1, a3);
                const double K = base_value(a1, a3);
                double minL = kInf, minR = kInf;
                for (const auto& e : left.e)
                    if (e.ok) minL = std::min(minL, e.value);
                for (const auto& e : right.e)
                    if (e.ok) minR = std::min(minR, e.value);
                struct Pick {
                    int a, b, c;
                    double v;
                };
                std::vector<Pick> Ls, Rs;
                for (int a2 = 0; a2 < A1; ++a2)
                    for (int b1 = 0; b1 < B0; ++b1)
                        for (int b2 = 0; b2 < B1; ++b2)
                            if (const auto& e = left.at(a2, b1, b2); e.ok && K + e.value + minR <= T)
                                Ls.push_back({a2, b1, b2, e.value});
                for (int a4 = 0; a4 < A3; ++a4)
                    for (int b4 = 0; b4 < B3; ++b4)
                        for (int b3 = 0; b3 < B2; ++b3)
                            if (const auto& e = right.at(a4, b4, b3); e.ok && K + e.value + minL <= T)
                                Rs.push_back({a4, b4, b3, e.value});
                for (const auto& l : Ls)
                    for (const auto& r : Rs) {
                        if (l.b + r.b > c[0] + 2 * a1 - 1 || l.c + r.c > c[2] + 2 * a3 - 1) continue;
                        const double v = K + l.v + r.v;
                        if (v > T) continue;
                        const Tuple8 t{a1, l.a, a3, r.a, l.b, l.c, r.c, r.b};
                        if (!winner || t < *winner) {
                            winner = t;
                            winner_value = v;
                        }
                    }
            }
        if (!winner) throw std::logic_error("structured search lost its minimizer");
        const Tuple8& t = *winner;
        out.disp.alpha = {t[0], t[1], t[2], t[3]};
        out.disp.beta = {t[4], t[5], t[6], t[7]};
        const OctagonOffsets O_new = O.displaced(out.disp);
        if (!O_new.valid()) throw std::logic_error("structured search produced invalid offsets");
        I_new = O_new.cells();
        F_struct = winner_value;
    }
    out.collapsed = collapse;

    const Region Z_new = I_new.empty() ? Region{} : outer_boundary(I_new);
    out.u = I_new.empty() ? SpinGrid(u_old.window(), eps, -1) : SpinGrid::from_phases(I_new, Z_new, eps, 1);
    out.value = step_functional(out.u, u_old, params);
    if (std::abs(out.value.total - F_struct) > 1e-9 * std::max(1.0, std::abs(F_struct)))
        throw std::logic_error("structured functional value disagrees with direct evaluation");
    return out;
}

// ---------------------------------------------------------------------------
// Structured search, gamma < 2

StructuredResult structured_minimizer_gamma_low(const SpinGrid& u_old, const ModelParams& params,
                                                const StructuredOptions& options) {
    if (!(params.gamma < 2)) throw PreconditionError("the pinned-diagonal search applies to gamma < 2");
    require_matching_spacing(u_old, params);
    const Region I_old = u_old.plus();
    const Region Z_old = u_old.zero();
    if (I_old.empty()) throw PreconditionError("structured search needs a nonempty phase-one set");
    const long C = long(Z_old.size());
    if (C < long(outer_boundary(I_old).size()))
        throw PreconditionError("surfactant cannot ring the phase-one set");

    const double eps = params.epsilon, w = 1.0 - params.k, zeta = params.zeta;
    const OctagonClassification cls = classify_shape(I_old, C, eps);
    if (cls.kind == ShapeKind::StaircaseOther)
        throw PreconditionError("phase-one set is neither an octagon nor a quasi-rectangle");
    const OctagonOffsets& O = cls.hull;
    const auto c = O.side_counts();
    const auto m = O.diagonal_steps();
    for (int v : c)
        if (v < options.min_side_cells) throw PreconditionError("a parallel side is shorter than the width threshold");

    const double threshold = pinning_threshold(C, eps, options.stage_exponent);
    bool stage1 = false;
    for (int v : m)
        if (eps * v > threshold) stage1 = true;

    StructuredResult out;
    out.stage = stage1 ? 1 : 2;
    const int n_h = O.ymax - O.ymin + 1, n_v = O.xmax - O.xmin + 1;
    for (int i = 0; i < 4; ++i) {
        const double x = 2.0 * zeta * w / (eps * c[i]);
        int lo = stage1 ? 0 : std::max(0, int(std::floor(x)) - 1);
        int hi = stage1 ? int(std::ceil(x)) + 2 : int(std::ceil(x)) + 1;
        hi = std::min(hi, (i % 2 == 0 ? n_h : n_v) - 1);
        lo = std::min(lo, hi);
        out.alpha_band[i] = {lo, hi};
    }

    double best = kInf;
    std::optional<std::array<int, 4>> best_alpha;
    Region best_I, best_Z;
    auto search = [&](const std::array<std::pair<int, int>, 4>& band) {
        for (int a1 = band[0].first; a1 <= band[0].second; ++a1)
            for (int a2 = band[1].first; a2 <= band[1].second; ++a2)
                for (int a3 = band[2].first; a3 <= band[2].second; ++a3)
                    for (int a4 = band[3].first; a4 <= band[3].second; ++a4) {
                        if (a1 + a3 > n_h - 1 || a2 + a4 > n_v - 1) continue;
                        const RectSpec box{O.xmin + a2, O.xmax - a4, O.ymin + a1, O.ymax - a3};
                        std::vector<Coord> kept;
                        for (Coord p : I_old)
                            if (box.contains(p)) kept.push_back(p);
                        if (kept.empty()) continue;
                        Region I_new = Region::from_sorted_unique(std::move(kept));
                        Region Z_new;
                        try {
                            Z_new = place_surfactant(I_new, C, options.placement_seed);
                        } catch (const PreconditionError&) {
                            continue;
                        }
                        const SpinGrid u = SpinGrid::from_phases(I_new, Z_new, eps, 1);
                        const StepFunctionalValue v = step_functional(u, u_old, params);
                        if (options.audit) {
                            if (out.audit.size() >= options.audit_limit)
                                throw PreconditionError("audit candidate limit exceeded");
                            CandidateRecord rec;
                            rec.disp = O.displacement_to(OctagonOffsets::hull(I_new));
                            rec.energy = v.energy;
                            rec.d1 = v.d1;
                            rec.d0 = v.d0;
                            rec.total = v.total;
                            rec.perimeter = perimeter_from_slices(I_new, eps);
                            out.audit.push_back(rec);
                        }
                        if (!best_alpha || v.total < best - tie_tolerance(best)) {
                            best = v.total;
                            best_alpha = std::array<int, 4>{a1, a2, a3, a4};
                            best_I = std::move(I_new);
                            best_Z = std::move(Z_new);
                            out.value = v;
                        }
                    }
    };
    search(out.alpha_band);
    if (!best_alpha) {
        // The stage-two band can exclude every nonempty set on very thin shapes.
        for (auto& b : out.alpha_band) b.first = 0;
        search(out.alpha_band);
    }

    // Dissolving I entirely: the surfactant gathers into a compact block at the
    // lower-left corner of the old support. Ordered last, so ties keep I.
    if (options.include_empty || !best_alpha) {
        const RectSpec support = bounding_rect(set_union(I_old, Z_old));
        const int width = int(std::ceil(std::sqrt(double(C))));
        std::vector<Coord> blob;
        for (long n = 0; n < C; ++n) blob.push_back({support.xmin + int(n % width), support.ymin + int(n / width)});
        Region Z_new(std::move(blob));
        const SpinGrid u = Z_new.empty() ? SpinGrid(u_old.window(), eps, -1) : SpinGrid::from_phases({}, Z_new, eps, 1);
        const StepFunctionalValue v = step_functional(u, u_old, params);
        if (options.audit) {
            CandidateRecord rec;
            rec.empty = true;
            rec.energy = v.energy;
            rec.d1 = v.d1;
            rec.d0 = v.d0;
            rec.total = v.total;
            out.audit.push_back(rec);
        }
        if (!best_alpha || v.total < best - tie_tolerance(best)) {
            out.value = v;
            out.u = u;
            out.collapsed = true;
            return out;
        }
    }

    out.u = SpinGrid::from_phases(best_I, best_Z, eps, 1);
    out.disp = O.displacement_to(OctagonOffsets::hull(best_I));
    return out;
}

}  // namespace beg
