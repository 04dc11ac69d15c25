#include "beg/energy.hpp"

#include "beg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace beg {

void ModelParams::validate() const {
    if (!(k > 1.0 / 3.0 && k < 1.0))
        throw ValidationError("k = " + std::to_string(k) + " is outside the admissible interval (1/3, 1)");
    if (!(gamma > 0)) throw ValidationError("gamma must be positive");
    if (!(zeta > 0)) throw ValidationError("zeta must be positive");
    if (!(epsilon > 0)) throw ValidationError("epsilon must be positive");
}

double pair_cost(int s, int t, const ModelParams& params) {
    const int st = s * t;
    return params.epsilon * (1.0 - st - params.k * (1.0 - st * st));
}

namespace {

void tally(int s, int t, BondTally& b) {
    const int st = s * t;
    if (st == -1) ++b.opposite;
    else if (st == 0) ++b.mixed;
}

}  // namespace

BondTally total_bonds(const SpinGrid& u) {
    // Bonds leaving the window's one-cell dilation join two -1 cells and cost nothing.
    const RectSpec box = u.window().dilated(1);
    BondTally b;
    for (int y = box.ymin; y <= box.ymax; ++y)
        for (int x = box.xmin; x <= box.xmax; ++x) {
            const int s = u.at({x, y});
            if (x < box.xmax) tally(s, u.at({x + 1, y}), b);
            if (y < box.ymax) tally(s, u.at({x, y + 1}), b);
        }
    return b;
}

double total_energy(const SpinGrid& u, const ModelParams& params) { return total_bonds(u).energy(params); }

double local_energy(const SpinGrid& u, const Region& I, const Region& J, const ModelParams& params) {
    BondTally b;
    for (Coord p : I)
        for (Coord q : {Coord{p.x + 1, p.y}, Coord{p.x, p.y + 1}})
            if (J.contains(q)) tally(u.at(p), u.at(q), b);
    return b.energy(params);
}

double local_energy(const SpinGrid& u, const Region& I, const ModelParams& params) {
    BondTally b;
    for (Coord p : I)
        for (Coord q : {Coord{p.x + 1, p.y}, Coord{p.x, p.y + 1}}) tally(u.at(p), u.at(q), b);
    return b.energy(params);
}

double region_energy(const SpinGrid& u, const Region& I, const ModelParams& params) {
    BondTally b;
    for (Coord p : I) {
        for (Coord q : neighbors(p)) {
            // A bond inside I is met from both ends; keep the lower-left one.
            if (I.contains(q) && q < p) continue;
            tally(u.at(p), u.at(q), b);
        }
    }
    return b.energy(params);
}

double surfactant_energy_closed_form(const SpinGrid& u, const ModelParams& params) {
    const Region Z = u.zero();
    if (Z.empty()) return 0.0;
    const double eps = params.epsilon, w = 1.0 - params.k;
    return 2.0 * eps * w * double(Z.size()) + 0.5 * w * perimeter(Z, eps);
}

double wetted_component_energy(const SpinGrid& u, const Region& G, const ModelParams& params) {
    const Region I = u.plus(), Z = u.zero();
    const Region IZ = set_union(I, Z);
    if (G.empty() || !G.is_subset_of(IZ))
        throw PreconditionError("wetted component must be a nonempty subset of the surfactant and phase-one cells");
    const auto comps = connected_components(IZ, Connectivity::Strong);
    if (std::find(comps.begin(), comps.end(), G) == comps.end())
        throw PreconditionError("wetted component must be a strong component of the surfactant and phase-one cells");
    if (!inner_boundary(G).is_subset_of(Z))
        throw PreconditionError("wetted component must have its inner boundary in the surfactant phase");

    const double eps = params.epsilon, w = 1.0 - params.k;
    double per = perimeter(G, eps);
    for (const Region& B : connected_components(set_intersection(I, G), Connectivity::Strong))
        per += perimeter(B, eps);
    return 2.0 * eps * w * double(set_intersection(G, Z).size()) + 0.5 * w * per;
}

double limit_surface_tension(double n1, double n2, double k) {
    if (std::abs(std::hypot(n1, n2) - 1.0) > 1e-12) throw PreconditionError("normal must be a unit vector");
    const double a = std::abs(n1), b = std::abs(n2);
    return (1.0 - k) * (3.0 * std::max(a, b) + std::min(a, b));
}

}  // namespace beg
