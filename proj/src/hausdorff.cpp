#include "beg/hausdorff.hpp"

#include "beg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace beg {

namespace {

struct Pt {
    double x, y;
};

double seg_distance(Pt p, Pt a, Pt b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    double t = 0.0;
    if (len2 > 0) t = std::clamp(((p.x - a.x) * vx + (p.y - a.y) * vy) / len2, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * vx), p.y - (a.y + t * vy));
}

std::vector<Pt> polygon(const OctagonSpec& A) {
    std::vector<Pt> v;
    for (const auto& q : A.vertices()) v.push_back({q[0], q[1]});
    return v;
}

// Union of closed epsilon-squares centred at the cells of a region.
class SquareUnion {
public:
    SquareUnion(const Region& R, double eps) : mask_(R, 1), eps_(eps), box_(bounding_rect(R)) {}

    bool covers_cell(Coord c) const { return mask_.test(c); }
    double eps() const { return eps_; }

    Coord cell_of(Pt p) const { return {int(std::lround(p.x / eps_)), int(std::lround(p.y / eps_))}; }

    double square_distance(Pt p, Coord c) const {
        const double dx = std::max(0.0, std::abs(p.x - eps_ * c.x) - 0.5 * eps_);
        const double dy = std::max(0.0, std::abs(p.y - eps_ * c.y) - 0.5 * eps_);
        return std::hypot(dx, dy);
    }

    // Cells of the union within Linf index radius r of c.
    void cells_near(Coord c, int r, std::vector<Coord>& out) const {
        out.clear();
        const int x0 = std::max(c.x - r, box_.xmin), x1 = std::min(c.x + r, box_.xmax);
        const int y0 = std::max(c.y - r, box_.ymin), y1 = std::min(c.y + r, box_.ymax);
        for (int y = y0; y <= y1; ++y)
            for (int x = x0; x <= x1; ++x)
                if (mask_.test({x, y})) out.push_back({x, y});
    }

    double distance(Pt p) const {
        const Coord q0 = cell_of(p);
        if (mask_.test(q0)) return 0.0;
        const int reach = std::max({std::abs(q0.x - box_.xmin), std::abs(q0.x - box_.xmax), std::abs(q0.y - box_.ymin),
                                    std::abs(q0.y - box_.ymax)}) + 1;
        double best = INFINITY;
        for (int R = 1; R <= reach; ++R) {
            for (int y = q0.y - R; y <= q0.y + R; ++y) {
                const bool edge_row = (y == q0.y - R || y == q0.y + R);
                for (int x = q0.x - R; x <= q0.x + R; x += edge_row ? 1 : 2 * R)
                    if (mask_.test({x, y})) best = std::min(best, square_distance(p, {x, y}));
            }
            // Squares at Linf index distance > R lie at least R * eps away.
            if (best <= R * eps_) break;
        }
        return best;
    }

private:
    CellMask mask_;
    double eps_;
    RectSpec box_;
};

// Squared distance from a + t (b - a) to square c as q2 t^2 + q1 t + q0, valid
// while the point stays inside one lattice cell footprint.
struct Quad {
    double a2, a1, a0;
    double at(double t) const { return (a2 * t + a1) * t + a0; }
};

Quad square_quad(const SquareUnion& U, Coord c, Pt a, Pt b, double t_mid) {
    const double eps = U.eps();
    Quad q{0, 0, 0};
    const double px = a.x + t_mid * (b.x - a.x), py = a.y + t_mid * (b.y - a.y);
    auto add_axis = [&](double p_mid, double start, double delta, double centre) {
        const double lo = centre - 0.5 * eps, hi = centre + 0.5 * eps;
        double edge;
        if (p_mid < lo) edge = lo;
        else if (p_mid > hi) edge = hi;
        else return;
        // (start + t delta - edge)^2
        const double s = start - edge;
        q.a2 += delta * delta;
        q.a1 += 2.0 * s * delta;
        q.a0 += s * s;
    };
    add_axis(px, a.x, b.x - a.x, eps * c.x);
    add_axis(py, a.y, b.y - a.y, eps * c.y);
    return q;
}

// max over the segment [a, b] of the distance to the union.
double segment_max_distance(const SquareUnion& U, Pt a, Pt b) {
    const double eps = U.eps();
    std::vector<double> cuts{0.0, 1.0};
    auto add_cuts = [&](double s, double e) {
        if (s == e) return;
        const double lo = std::min(s, e), hi = std::max(s, e);
        for (double k = std::ceil(lo / eps - 0.5); (k + 0.5) * eps <= hi; k += 1.0) {
            const double t = ((k + 0.5) * eps - s) / (e - s);
            if (t > 0 && t < 1) cuts.push_back(t);
        }
    };
    add_cuts(a.x, b.x);
    add_cuts(a.y, b.y);
    std::sort(cuts.begin(), cuts.end());

    const double len = std::hypot(b.x - a.x, b.y - a.y);
    double best = std::max(U.distance(a), U.distance(b));
    std::vector<Coord> near;
    std::vector<Quad> quads;
    std::vector<double> ts;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double t0 = cuts[i], t1 = cuts[i + 1];
        if (t1 - t0 <= 0) continue;
        const double tm = 0.5 * (t0 + t1);
        const Pt m{a.x + tm * (b.x - a.x), a.y + tm * (b.y - a.y)};
        const double fm = U.distance(m);
        if (fm == 0.0) continue;  // the whole piece lies in one covered square
        const double bound = fm + 0.5 * (t1 - t0) * len;
        const Coord cm = U.cell_of(m);
        U.cells_near(cm, int(std::ceil(bound / eps)) + 1, near);
        quads.clear();
        for (Coord c : near) quads.push_back(square_quad(U, c, a, b, tm));
        ts.assign({t0, t1});
        for (std::size_t p = 0; p < quads.size(); ++p)
            for (std::size_t q = p + 1; q < quads.size(); ++q) {
                const double A2 = quads[p].a2 - quads[q].a2, A1 = quads[p].a1 - quads[q].a1,
                             A0 = quads[p].a0 - quads[q].a0;
                auto keep = [&](double t) {
                    if (t > t0 && t < t1) ts.push_back(t);
                };
                if (std::abs(A2) < 1e-300) {
                    if (std::abs(A1) > 1e-300) keep(-A0 / A1);
                    continue;
                }
                const double disc = A1 * A1 - 4 * A2 * A0;
                if (disc < 0) continue;
                const double r = std::sqrt(disc);
                keep((-A1 - r) / (2 * A2));
                keep((-A1 + r) / (2 * A2));
            }
        for (double t : ts) {
            double f2 = INFINITY;
            for (const Quad& q : quads) f2 = std::min(f2, q.at(t));
            best = std::max(best, std::sqrt(std::max(0.0, f2)));
        }
    }
    return best;
}

void require_nonempty(const Region& R) {
    if (R.empty()) throw PreconditionError("Hausdorff distance of an empty set");
}

// sup over the union of squares of X of the distance to the convex octagon.
double directed_union_to_octagon(const Region& X, const OctagonSpec& A, double eps) {
    double best = 0.0;
    for (Coord c : inner_boundary(X))
        for (double sx : {-0.5, 0.5})
            for (double sy : {-0.5, 0.5})
                best = std::max(best, distance_to_octagon(A, eps * (c.x + sx), eps * (c.y + sy)));
    return best;
}

double directed_octagon_to_union(const OctagonSpec& A, const Region& Y, double eps) {
    const SquareUnion U(Y, eps);
    const auto v = polygon(A);
    double best = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Pt a = v[i], b = v[(i + 1) % v.size()];
        if (a.x == b.x && a.y == b.y) best = std::max(best, U.distance(a));
        else best = std::max(best, segment_max_distance(U, a, b));
    }
    return best;
}

double directed_union_to_union(const Region& X, const Region& Y, double eps) {
    const SquareUnion U(Y, eps);
    const CellMask mx(X, 1);
    double best = 0.0;
    for (Coord c : inner_boundary(X)) {
        const double cx = eps * c.x, cy = eps * c.y, h = 0.5 * eps;
        const Pt ll{cx - h, cy - h}, lr{cx + h, cy - h}, ul{cx - h, cy + h}, ur{cx + h, cy + h};
        if (!mx.test({c.x, c.y - 1})) best = std::max(best, segment_max_distance(U, ll, lr));
        if (!mx.test({c.x, c.y + 1})) best = std::max(best, segment_max_distance(U, ul, ur));
        if (!mx.test({c.x - 1, c.y})) best = std::max(best, segment_max_distance(U, ll, ul));
        if (!mx.test({c.x + 1, c.y})) best = std::max(best, segment_max_distance(U, lr, ur));
    }
    return best;
}

}  // namespace

double distance_to_octagon(const OctagonSpec& A, double x, double y) {
    if (A.contains(x, y, 1e-15)) return 0.0;
    const auto v = polygon(A);
    double best = INFINITY;
    for (std::size_t i = 0; i < v.size(); ++i) best = std::min(best, seg_distance({x, y}, v[i], v[(i + 1) % v.size()]));
    return best;
}

double hausdorff_distance(const Region& X, const Region& Y, double eps) {
    require_nonempty(X);
    require_nonempty(Y);
    if (X == Y) return 0.0;
    return std::max(directed_union_to_union(X, Y, eps), directed_union_to_union(Y, X, eps));
}

double hausdorff_distance(const Region& X, const OctagonSpec& Y, double eps) {
    require_nonempty(X);
    if (!Y.valid(1e-9)) throw PreconditionError("Hausdorff distance of an invalid octagon");
    return std::max(directed_union_to_octagon(X, Y, eps), directed_octagon_to_union(Y, X, eps));
}

double hausdorff_distance(const OctagonSpec& X, const Region& Y, double eps) { return hausdorff_distance(Y, X, eps); }

double hausdorff_distance(const OctagonSpec& X, const OctagonSpec& Y) {
    if (!X.valid(1e-9) || !Y.valid(1e-9)) throw PreconditionError("Hausdorff distance of an invalid octagon");
    double best = 0.0;
    for (const auto& v : X.vertices()) best = std::max(best, distance_to_octagon(Y, v[0], v[1]));
    for (const auto& v : Y.vertices()) best = std::max(best, distance_to_octagon(X, v[0], v[1]));
    return best;
}

}  // namespace beg
