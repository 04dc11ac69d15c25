#include "beg/dissipation.hpp"

#include "beg/errors.hpp"

#include <cmath>
#include <cstdlib>

namespace beg {

std::int64_t bulk_distance_sum(const Region& I_new, const Region& I_old) {
    if (I_old.empty()) throw PreconditionError("bulk dissipation needs a nonempty previous phase");
    const Region diff = symmetric_difference(I_new, I_old);
    if (diff.empty()) return 0;
    const RectSpec box = bounding_rect(I_old).united(bounding_rect(diff));
    const BoundaryDistanceField field(I_old, box);
    std::int64_t sum = 0;
    for (Coord p : diff) sum += field.at(p);
    return sum;
}

double dissipation_bulk(const Region& I_new, const Region& I_old, double eps) {
    return eps * eps * eps * double(bulk_distance_sum(I_new, I_old));
}

std::int64_t dissipation_surfactant(const Region& Z_new, const Region& Z_old) {
    return std::llabs(std::int64_t(Z_new.size()) - std::int64_t(Z_old.size()));
}

double combine_functional(double energy, double d1, std::int64_t d0, const ModelParams& params) {
    return energy + (d1 + std::pow(params.epsilon, params.gamma) * double(d0)) / params.tau();
}

StepFunctionalValue step_functional(const SpinGrid& u_new, const SpinGrid& u_old, const ModelParams& params) {
    if (u_new.epsilon() != params.epsilon || u_old.epsilon() != params.epsilon)
        throw PreconditionError("lattice spacing of the configurations does not match the model parameters");
    StepFunctionalValue v;
    v.energy = total_energy(u_new, params);
    v.d1 = dissipation_bulk(u_new.plus(), u_old.plus(), params.epsilon);
    v.d0 = dissipation_surfactant(u_new.zero(), u_old.zero());
    v.total = combine_functional(v.energy, v.d1, v.d0, params);
    return v;
}

}  // namespace beg
