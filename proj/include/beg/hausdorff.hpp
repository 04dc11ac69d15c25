#pragma once

#include "beg/lattice.hpp"
#include "beg/octagon.hpp"

namespace beg {

// Symmetric Hausdorff distance between physical sets. A Region stands for the
// union of closed epsilon-squares centred at its cells; an OctagonSpec for the
// closed convex polygon. Both arguments must be nonempty.
//
// Distances from a convex set are maximised at polygon vertices. Distances to a
// union of squares are maximised over the boundary of the other set, split at
// the lattice half-lines so that every square's nearest feature is fixed on each
// piece; the maximum of the lower envelope then sits at a piece end or where two
// squared distances cross. This assumes d(., union) has no interior local maximum,
// which holds when the union's complement is connected (staircase sets).
double hausdorff_distance(const Region& X, const Region& Y, double epsilon);
double hausdorff_distance(const Region& X, const OctagonSpec& Y, double epsilon);
double hausdorff_distance(const OctagonSpec& X, const Region& Y, double epsilon);
double hausdorff_distance(const OctagonSpec& X, const OctagonSpec& Y);

// Euclidean distance from a point to the closed convex octagon.
double distance_to_octagon(const OctagonSpec& A, double x, double y);

}  // namespace beg
