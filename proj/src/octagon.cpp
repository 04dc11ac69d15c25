#include "beg/octagon.hpp"

#include "beg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace beg {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

// Unit normals of the eight side lines, in the clockwise order
// P1, D1, P2, D2, P3, D3, P4, D4.
const std::array<std::array<double, 2>, 8> kNormals = {{
    {0.0, -1.0},
    {-1.0 / kSqrt2, -1.0 / kSqrt2},
    {-1.0, 0.0},
    {-1.0 / kSqrt2, 1.0 / kSqrt2},
    {0.0, 1.0},
    {1.0 / kSqrt2, 1.0 / kSqrt2},
    {1.0, 0.0},
    {1.0 / kSqrt2, -1.0 / kSqrt2},
}};

std::array<double, 8> interleaved(const OctagonSpec& A) {
    return {A.p[0], A.d[0], A.p[1], A.d[1], A.p[2], A.d[2], A.p[3], A.d[3]};
}

}  // namespace

std::array<int, 4> OctagonOffsets::side_counts() const {
    return {dmax + 2 * ymin - smin + 1, 2 * xmin - dmin - smin + 1, smax - 2 * ymax - dmin + 1,
            smax - 2 * xmax + dmax + 1};
}

std::array<int, 4> OctagonOffsets::diagonal_steps() const {
    return {smin - xmin - ymin, ymax + dmin - xmin, xmax + ymax - smax, xmax - dmax - ymin};
}

bool OctagonOffsets::valid() const {
    for (int c : side_counts())
        if (c < 1) return false;
    for (int m : diagonal_steps())
        if (m < 0) return false;
    return true;
}

int OctagonOffsets::row_lo(int y) const { return std::max({xmin, smin - y, dmin + y}); }
int OctagonOffsets::row_hi(int y) const { return std::min({xmax, smax - y, dmax + y}); }

Region OctagonOffsets::cells() const {
    std::vector<Coord> out;
    for (int y = ymin; y <= ymax; ++y)
        for (int x = row_lo(y), hi = row_hi(y); x <= hi; ++x) out.push_back({x, y});
    return Region::from_sorted_unique(std::move(out));
}

OctagonOffsets OctagonOffsets::displaced(const Displacements& g) const {
    OctagonOffsets o = *this;
    o.ymin += g.alpha[0];
    o.xmin += g.alpha[1];
    o.ymax -= g.alpha[2];
    o.xmax -= g.alpha[3];
    o.smin += g.beta[0];
    o.dmin += g.beta[1];
    o.smax -= g.beta[2];
    o.dmax -= g.beta[3];
    return o;
}

Displacements OctagonOffsets::displacement_to(const OctagonOffsets& in) const {
    Displacements g;
    g.alpha = {in.ymin - ymin, in.xmin - xmin, ymax - in.ymax, xmax - in.xmax};
    g.beta = {in.smin - smin, in.dmin - dmin, smax - in.smax, dmax - in.dmax};
    return g;
}

OctagonOffsets OctagonOffsets::hull(const Region& I) {
    if (I.empty()) throw PreconditionError("octagon hull of an empty region");
    const Coord f = *I.begin();
    OctagonOffsets o{f.y, f.x, f.y, f.x, f.x + f.y, f.x - f.y, f.x + f.y, f.x - f.y};
    for (Coord c : I) {
        o.ymin = std::min(o.ymin, c.y);
        o.ymax = std::max(o.ymax, c.y);
        o.xmin = std::min(o.xmin, c.x);
        o.xmax = std::max(o.xmax, c.x);
        o.smin = std::min(o.smin, c.x + c.y);
        o.smax = std::max(o.smax, c.x + c.y);
        o.dmin = std::min(o.dmin, c.x - c.y);
        o.dmax = std::max(o.dmax, c.x - c.y);
    }
    return o;
}

OctagonOffsets OctagonOffsets::from_box(const RectSpec& r) { return from_box_and_cuts(r, {0, 0, 0, 0}); }

OctagonOffsets OctagonOffsets::from_box_and_cuts(const RectSpec& r, std::array<int, 4> cut) {
    return {r.ymin,
            r.xmin,
            r.ymax,
            r.xmax,
            r.xmin + r.ymin + cut[0],
            r.xmin - r.ymax + cut[1],
            r.xmax + r.ymax - cut[2],
            r.xmax - r.ymin - cut[3]};
}

std::array<double, 4> OctagonSpec::parallel_lengths() const {
    std::array<double, 4> L;
    for (int i = 0; i < 4; ++i) L[i] = kSqrt2 * (d[(i + 3) % 4] + d[i]) - 2.0 * p[i];
    return L;
}

std::array<double, 4> OctagonSpec::diagonal_lengths() const {
    std::array<double, 4> L;
    for (int i = 0; i < 4; ++i) L[i] = kSqrt2 * (p[i] + p[(i + 1) % 4]) - 2.0 * d[i];
    return L;
}

bool OctagonSpec::valid(double tol) const {
    for (double v : parallel_lengths())
        if (v < -tol) return false;
    for (double v : diagonal_lengths())
        if (v < -tol) return false;
    return true;
}

bool OctagonSpec::contains(double x, double y, double tol) const {
    auto h = interleaved(*this);
    for (int i = 0; i < 8; ++i)
        if (kNormals[i][0] * x + kNormals[i][1] * y > h[i] + tol) return false;
    return true;
}

std::vector<std::array<double, 2>> OctagonSpec::vertices() const {
    auto h = interleaved(*this);
    std::vector<std::array<double, 2>> v;
    v.reserve(8);
    for (int i = 0; i < 8; ++i) {
        const auto& a = kNormals[i];
        const auto& b = kNormals[(i + 1) % 8];
        const double det = a[0] * b[1] - a[1] * b[0];
        const double hi = h[i], hj = h[(i + 1) % 8];
        v.push_back({(hi * b[1] - hj * a[1]) / det, (a[0] * hj - b[0] * hi) / det});
    }
    return v;
}

OctagonSpec OctagonSpec::from_box(double x0, double x1, double y0, double y1, std::array<double, 4> cut) {
    OctagonSpec A;
    A.p = {-y0, -x0, y1, x1};
    A.d = {-(x0 + y0 + cut[0]) / kSqrt2, (-x0 + y1 - cut[1]) / kSqrt2, (x1 + y1 - cut[2]) / kSqrt2,
           (x1 - y0 - cut[3]) / kSqrt2};
    return A;
}

OctagonSpec OctagonSpec::enclosing(const OctagonOffsets& o, double eps) {
    auto m = o.diagonal_steps();
    return from_box(eps * (o.xmin - 0.5), eps * (o.xmax + 0.5), eps * (o.ymin - 0.5), eps * (o.ymax + 0.5),
                    {eps * m[0], eps * m[1], eps * m[2], eps * m[3]});
}

OctagonSpec OctagonSpec::translated(double dx, double dy) const {
    OctagonSpec A = *this;
    auto h = interleaved(*this);
    for (int i = 0; i < 8; ++i) h[i] += kNormals[i][0] * dx + kNormals[i][1] * dy;
    for (int i = 0; i < 4; ++i) {
        A.p[i] = h[2 * i];
        A.d[i] = h[2 * i + 1];
    }
    return A;
}

Region discretize_octagon(const OctagonSpec& A, double eps) {
    if (!(eps > 0)) throw ValidationError("lattice spacing epsilon must be positive");
    // Boundary points belong to the closed octagon; the slack absorbs rounding
    // in the support values, which are only known to a few ulps.
    const double slack = 1e-9;
    const double tol = slack * eps;
    const int x0 = int(std::ceil(-A.p[1] / eps - slack)), x1 = int(std::floor(A.p[3] / eps + slack));
    const int y0 = int(std::ceil(-A.p[0] / eps - slack)), y1 = int(std::floor(A.p[2] / eps + slack));
    std::vector<Coord> out;
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x)
            if (A.contains(eps * x, eps * y, tol)) out.push_back({x, y});
    return Region::from_sorted_unique(std::move(out));
}

std::string to_string(ShapeKind k) {
    switch (k) {
        case ShapeKind::Octagon: return "octagon";
        case ShapeKind::QuasiRectangle: return "quasi-rectangle";
        case ShapeKind::StaircaseOther: return "staircase-other";
    }
    return "unknown";
}

int quasi_rectangle_steps(long surfactant_count, double eps) {
    const double a = std::ceil(4.0 * std::sqrt(double(std::max(0L, surfactant_count))) - 1e-9);
    const double b = std::ceil(std::pow(eps, -7.0 / 8.0) - 1e-9);
    return int(std::max(a, b));
}

bool is_discrete_octagon(const Region& I) {
    if (I.empty()) return false;
    return OctagonOffsets::hull(I).cells() == I;
}

namespace {

std::array<Region, 4> external_slices(const Region& I) {
    auto s = slices(I);
    std::array<Region, 4> out;
    auto row = [](const Slice& sl) {
        std::vector<Coord> v;
        for (int x = sl.lo; x <= sl.hi; ++x) v.push_back({x, sl.line});
        return Region::from_sorted_unique(std::move(v));
    };
    auto col = [](const Slice& sl) {
        std::vector<Coord> v;
        for (int y = sl.lo; y <= sl.hi; ++y) v.push_back({sl.line, y});
        return Region::from_sorted_unique(std::move(v));
    };
    out[0] = row(s.horizontal.front());
    out[1] = col(s.vertical.front());
    out[2] = row(s.horizontal.back());
    out[3] = col(s.vertical.back());
    return out;
}

Region diagonal_segment(Coord from, Coord step, int steps) {
    std::vector<Coord> v;
    for (int t = 0; t <= steps; ++t) v.push_back({from.x + t * step.x, from.y + t * step.y});
    return Region(std::move(v));
}

}  // namespace

bool boundary_pair_criterion(const Region& I) {
    if (!is_staircase(I)) return false;
    auto ext = external_slices(I);
    Region inner = inner_boundary(I);
    for (Coord p : inner) {
        for (Coord q : {Coord{p.x + 1, p.y}, Coord{p.x, p.y + 1}}) {
            if (!inner.contains(q)) continue;
            bool ok = false;
            for (const auto& side : ext) ok = ok || (side.contains(p) && side.contains(q));
            if (!ok) return false;
        }
    }
    return true;
}

OctagonClassification classify_shape(const Region& I, long surfactant_count, double eps) {
    OctagonClassification out;
    out.corner_threshold_steps = quasi_rectangle_steps(surfactant_count, eps);
    if (!is_staircase(I)) return out;

    out.hull = OctagonOffsets::hull(I);
    out.parallel_sides = external_slices(I);
    const auto counts = out.hull.side_counts();
    const auto m = out.hull.diagonal_steps();
    for (int i = 0; i < 4; ++i) {
        out.P[i] = eps * counts[i];
        out.D[i] = kSqrt2 * eps * m[i];
    }
    out.is_octagon = out.hull.cells() == I;
    if (out.is_octagon) {
        const auto& o = out.hull;
        out.diagonal_sides[0] = diagonal_segment({o.xmin, o.smin - o.xmin}, {1, -1}, m[0]);
        out.diagonal_sides[1] = diagonal_segment({o.xmin, o.xmin - o.dmin}, {1, 1}, m[1]);
        out.diagonal_sides[2] = diagonal_segment({o.smax - o.ymax, o.ymax}, {1, -1}, m[2]);
        out.diagonal_sides[3] = diagonal_segment({o.dmax + o.ymin, o.ymin}, {1, 1}, m[3]);
    }

    // Quasi-rectangle test. Removing the external slices leaves J; the core is
    // forced to be the octagon spanning J's bounding box with the prescribed
    // corner size, and the fringes are whatever J holds outside it.
    const int M = out.corner_threshold_steps;
    Region J = I;
    for (const auto& s : out.parallel_sides) J = set_difference(J, s);
    if (!J.empty()) {
        const RectSpec box = bounding_rect(J);
        QuasiRectangleParts parts;
        parts.core = OctagonOffsets::from_box_and_cuts(box, {M, M, M, M});
        if (parts.core.valid()) {
            parts.core_cells = parts.core.cells();
            if (parts.core_cells.is_subset_of(J) &&
                connected_components(J, Connectivity::Strong).size() == 1) {
                std::array<std::vector<Coord>, 4> fr;
                for (Coord c : set_difference(J, parts.core_cells)) {
                    const int s = c.x + c.y, d = c.x - c.y;
                    if (s < parts.core.smin) fr[0].push_back(c);
                    else if (d < parts.core.dmin) fr[1].push_back(c);
                    else if (s > parts.core.smax) fr[2].push_back(c);
                    else fr[3].push_back(c);
                }
                for (int i = 0; i < 4; ++i) parts.fringes[i] = Region::from_sorted_unique(std::move(fr[i]));
                out.quasi = std::move(parts);
                out.is_quasi_rectangle = true;
            }
        }
    }

    const int max_m = *std::max_element(m.begin(), m.end());
    if (out.is_octagon) {
        // Rectangles stay octagons; small nonzero corners mark the quasi-rectangle stage.
        out.kind = (max_m > 0 && max_m <= M) ? ShapeKind::QuasiRectangle : ShapeKind::Octagon;
    } else if (out.is_quasi_rectangle) {
        out.kind = ShapeKind::QuasiRectangle;
    }
    return out;
}

}  // namespace beg
