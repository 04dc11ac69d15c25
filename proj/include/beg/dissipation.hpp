#pragma once

#include "beg/energy.hpp"
#include "beg/lattice.hpp"

#include <cstdint>

namespace beg {

struct StepFunctionalValue {
    double energy = 0.0;
    double d1 = 0.0;
    std::int64_t d0 = 0;
    double total = 0.0;
};

// Sum of d1(p, boundary of I_old) over the symmetric difference, in lattice units.
std::int64_t bulk_distance_sum(const Region& I_new, const Region& I_old);
// eps^3 * sum over I_new (sym. diff.) I_old of d1(p, boundary of I_old).
double dissipation_bulk(const Region& I_new, const Region& I_old, double epsilon);
std::int64_t dissipation_surfactant(const Region& Z_new, const Region& Z_old);

// E(u_new) + (D1 + eps^gamma D0) / tau.
StepFunctionalValue step_functional(const SpinGrid& u_new, const SpinGrid& u_old, const ModelParams& params);
double combine_functional(double energy, double d1, std::int64_t d0, const ModelParams& params);

}  // namespace beg
