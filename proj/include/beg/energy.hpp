#pragma once

#include "beg/lattice.hpp"

#include <array>
#include <cstdint>

namespace beg {

struct ModelParams {
    double k = 0.5;
    double gamma = 3.0;
    double zeta = 1.0;
    double epsilon = 1.0 / 16;

    double tau() const { return zeta * epsilon; }
    // Throws ValidationError unless k lies in (1/3, 1) and gamma, zeta, epsilon are positive.
    void validate() const;
};

// Cost of one nearest-neighbour bond: epsilon (1 - st - k (1 - (st)^2)).
double pair_cost(int s, int t, const ModelParams& params);

// Bond counts by class. Every bond energy is 2 eps * n_opposite + eps (1-k) * n_mixed.
struct BondTally {
    std::int64_t opposite = 0;  // st = -1
    std::int64_t mixed = 0;     // st = 0
    double energy(const ModelParams& params) const {
        return params.epsilon * (2.0 * double(opposite) + (1.0 - params.k) * double(mixed));
    }
};

BondTally total_bonds(const SpinGrid& u);
double total_energy(const SpinGrid& u, const ModelParams& params);

// Sum over ordered pairs p in I, q in J at unit distance with p <= q componentwise.
double local_energy(const SpinGrid& u, const Region& I, const Region& J, const ModelParams& params);
// Same sum with J the whole lattice.
double local_energy(const SpinGrid& u, const Region& I, const ModelParams& params);

// Energy of all bonds with at least one endpoint in I, each counted once.
// This is the localized energy the surfactant identities are stated for.
double region_energy(const SpinGrid& u, const Region& I, const ModelParams& params);

// 2 eps (1-k) #Z + (1-k)/2 Per(Z) for the zero phase Z of u.
double surfactant_energy_closed_form(const SpinGrid& u, const ModelParams& params);

// Closed form for a strongly connected component G of Z u I whose inner
// boundary is surfactant: 2 eps (1-k) #(G n Z) + (1-k)/2 (Per G + sum Per B_i),
// with B_i the strong components of I n G.
double wetted_component_energy(const SpinGrid& u, const Region& G, const ModelParams& params);

// Limit anisotropy (1-k) (3 max(|n1|,|n2|) + min(|n1|,|n2|)) of a unit normal.
double limit_surface_tension(double n1, double n2, double k);

}  // namespace beg
