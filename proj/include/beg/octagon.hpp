#pragma once

#include "beg/lattice.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace beg {

// Inward side motions of one step, in lattice units. alpha[i] moves the
// parallel side P_{i+1}, beta[i] the diagonal side D_{i+1}.
struct Displacements {
    std::array<int, 4> alpha{0, 0, 0, 0};
    std::array<int, 4> beta{0, 0, 0, 0};
    friend bool operator==(const Displacements&, const Displacements&) = default;
};

// Discrete octagon as eight integer half-plane offsets:
//   ymin <= y <= ymax, xmin <= x <= xmax, smin <= x+y <= smax, dmin <= x-y <= dmax.
// Sides are labelled clockwise from the bottom: P1 bottom, P2 left, P3 top,
// P4 right; D1 lower-left, D2 upper-left, D3 upper-right, D4 lower-right.
struct OctagonOffsets {
    int ymin = 0, xmin = 0, ymax = 0, xmax = 0;
    int smin = 0, dmin = 0, smax = 0, dmax = 0;

    // Cells on each parallel side.
    std::array<int, 4> side_counts() const;
    // Unit steps along each diagonal side (D_i = sqrt(2) * epsilon * m_i).
    std::array<int, 4> diagonal_steps() const;
    // Every side is present (P >= 1 cell, m >= 0); equivalently the offsets are tight.
    bool valid() const;

    bool contains(Coord c) const {
        const int s = c.x + c.y, d = c.x - c.y;
        return c.y >= ymin && c.y <= ymax && c.x >= xmin && c.x <= xmax && s >= smin && s <= smax &&
               d >= dmin && d <= dmax;
    }
    int row_lo(int y) const;
    int row_hi(int y) const;
    Region cells() const;
    RectSpec box() const { return {xmin, xmax, ymin, ymax}; }

    OctagonOffsets displaced(const Displacements& disp) const;
    // Displacements carrying *this onto `inner`; both must be tight.
    Displacements displacement_to(const OctagonOffsets& inner) const;

    // Tightest offsets whose half-planes contain I.
    static OctagonOffsets hull(const Region& I);
    static OctagonOffsets from_box(const RectSpec& r);
    // Box with corners cut by cut[i] unit steps along D_{i+1}.
    static OctagonOffsets from_box_and_cuts(const RectSpec& r, std::array<int, 4> cut);

    friend bool operator==(const OctagonOffsets&, const OctagonOffsets&) = default;
};

// Continuum octagon with sides normal to the eight lattice directions,
// stored as support values h(nu) = max_{x in A} x . nu.
//   p[0..3]: normals -e2, -e1, +e2, +e1 (sides P1..P4)
//   d[0..3]: normals (-1,-1), (-1,1), (1,1), (1,-1) over sqrt(2) (sides D1..D4)
struct OctagonSpec {
    std::array<double, 4> p{0, 0, 0, 0};
    std::array<double, 4> d{0, 0, 0, 0};

    std::array<double, 4> parallel_lengths() const;
    std::array<double, 4> diagonal_lengths() const;
    // All side lengths nonnegative up to `tol`.
    bool valid(double tol = 1e-12) const;
    bool contains(double x, double y, double tol = 0.0) const;
    // Boundary vertices in clockwise order starting at the left end of P1.
    // Degenerate sides produce repeated vertices.
    std::vector<std::array<double, 2>> vertices() const;

    // Box [x0,x1]x[y0,y1] with corner legs cut[i] = D_{i+1}/sqrt(2).
    static OctagonSpec from_box(double x0, double x1, double y0, double y1,
                                std::array<double, 4> cut = {0, 0, 0, 0});
    // Smallest continuum octagon containing the union of epsilon-squares of I's hull.
    static OctagonSpec enclosing(const OctagonOffsets& o, double epsilon);

    OctagonSpec translated(double dx, double dy) const;
};

// Lattice cells whose physical point lies in the closed octagon. A degenerate
// octagon without lattice points yields an empty region.
Region discretize_octagon(const OctagonSpec& A, double epsilon);

enum class ShapeKind { Octagon, QuasiRectangle, StaircaseOther };
std::string to_string(ShapeKind k);

struct QuasiRectangleParts {
    OctagonOffsets core;             // the inner octagon with the prescribed corner size
    Region core_cells;
    std::array<Region, 4> fringes;   // Delta_i, the cells of I outside the core in corner i
};

struct OctagonClassification {
    ShapeKind kind = ShapeKind::StaircaseOther;
    bool is_octagon = false;
    bool is_quasi_rectangle = false;
    OctagonOffsets hull;
    std::array<Region, 4> parallel_sides;  // external slices P1..P4
    std::array<Region, 4> diagonal_sides;  // lattice segments D1..D4 (octagon case)
    std::array<double, 4> P{0, 0, 0, 0};   // side lengths of the smallest enclosing octagon
    std::array<double, 4> D{0, 0, 0, 0};
    int corner_threshold_steps = 0;        // threshold for D_i / (sqrt(2) epsilon)
    std::optional<QuasiRectangleParts> quasi;
};

// Corner size, in lattice steps, that separates octagons from quasi-rectangles:
// max(ceil(4 sqrt(C)), ceil(epsilon^(-7/8))).
int quasi_rectangle_steps(long surfactant_count, double epsilon);

// Hull test: I equals the lattice points of its own tight octagon hull.
bool is_discrete_octagon(const Region& I);
// Boundary-pair test: every axis-adjacent pair of inner-boundary cells lies in
// one external slice. Agrees with the hull test on staircase sets at least
// three slices wide in each direction.
bool boundary_pair_criterion(const Region& I);

OctagonClassification classify_shape(const Region& I, long surfactant_count, double epsilon);

}  // namespace beg
