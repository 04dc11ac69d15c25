#pragma once

// Reference implementations used by the tests. They work on plain std::set
// cell lists and loop over every bond or cell pair, sharing no code with the
// library beyond the Coord, Region and SpinGrid containers.

#include "beg/energy.hpp"
#include "beg/lattice.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using beg::Coord;
using beg::Region;
using beg::SpinGrid;
using CellSet = std::set<std::pair<int, int>>;

inline CellSet to_set(const Region& r) {
    CellSet s;
    for (Coord c : r) s.insert({c.x, c.y});
    return s;
}

// Bond cost table written out by value: equal spins cost nothing, opposite
// spins cost 2 eps, any bond touching a zero spin costs eps (1-k).
inline double bond(int s, int t, double eps, double k) {
    if (s == t && s != 0) return 0.0;
    if (s * t == -1) return 2.0 * eps;
    return eps * (1.0 - k);
}

// Total energy: walk the window grown by one so that every bond between the
// window and the -1 sea is seen exactly once (right and up neighbours only).
inline double energy(const SpinGrid& u, double k) {
    const auto w = u.window().dilated(1);
    double e = 0.0;
    for (int y = w.ymin; y <= w.ymax; ++y)
        for (int x = w.xmin; x <= w.xmax; ++x) {
            e += bond(u.at({x, y}), u.at({x + 1, y}), u.epsilon(), k);
            e += bond(u.at({x, y}), u.at({x, y + 1}), u.epsilon(), k);
        }
    // The row below and the column left of the grown window only touch -1 cells.
    return e;
}

// Energy of the bonds with at least one endpoint in S, each counted once.
inline double energy_touching(const SpinGrid& u, const CellSet& S, double k) {
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> seen;
    double e = 0.0;
    const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
    for (auto [x, y] : S)
        for (int d = 0; d < 4; ++d) {
            std::pair<int, int> a{x, y}, b{x + dx[d], y + dy[d]};
            if (b < a) std::swap(a, b);
            if (!seen.insert({a, b}).second) continue;
            e += bond(u.at({a.first, a.second}), u.at({b.first, b.second}), u.epsilon(), k);
        }
    return e;
}

// Unit edges between S and its complement.
inline std::int64_t boundary_edges(const CellSet& S) {
    std::int64_t n = 0;
    for (auto [x, y] : S)
        for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
            if (!S.count({x + dx, y + dy})) ++n;
    return n;
}

// Complement cells with at least `min_nb` neighbours in S.
inline CellSet touching_cells(const CellSet& S, int min_nb, int exact = -1) {
    CellSet cand, out;
    for (auto [x, y] : S)
        for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
            if (!S.count({x + dx, y + dy})) cand.insert({x + dx, y + dy});
    for (auto [x, y] : cand) {
        int n = 0;
        for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) n += S.count({x + dx, y + dy}) ? 1 : 0;
        if (exact >= 0 ? n == exact : n >= min_nb) out.insert({x, y});
    }
    return out;
}

// L1 distance from p to the boundary of I: to the nearest cell of I from
// outside, to the nearest non-member from inside (searched in a box around I).
inline int d1_to_boundary(std::pair<int, int> p, const CellSet& I) {
    int best = INT_MAX;
    if (!I.count(p)) {
        for (auto q : I) best = std::min(best, std::abs(q.first - p.first) + std::abs(q.second - p.second));
        return best;
    }
    int xmin = INT_MAX, xmax = INT_MIN, ymin = INT_MAX, ymax = INT_MIN;
    for (auto [x, y] : I) {
        xmin = std::min(xmin, x), xmax = std::max(xmax, x);
        ymin = std::min(ymin, y), ymax = std::max(ymax, y);
    }
    for (int y = ymin - 1; y <= ymax + 1; ++y)
        for (int x = xmin - 1; x <= xmax + 1; ++x)
            if (!I.count({x, y})) best = std::min(best, std::abs(x - p.first) + std::abs(y - p.second));
    return best;
}

// Strongly connected (edge neighbours) and every row and column an interval.
inline bool is_staircase(const CellSet& S) {
    if (S.empty()) return false;
    CellSet seen{*S.begin()};
    std::vector<std::pair<int, int>> stack{*S.begin()};
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
            if (S.count({x + dx, y + dy}) && seen.insert({x + dx, y + dy}).second) stack.push_back({x + dx, y + dy});
    }
    if (seen.size() != S.size()) return false;
    // A row or column is an interval exactly when its cell count equals its span.
    std::map<int, std::array<int, 3>> rows, cols;  // min, max, count
    auto note = [](std::map<int, std::array<int, 3>>& m, int line, int v) {
        auto& r = m.try_emplace(line, std::array<int, 3>{v, v, 0}).first->second;
        r[0] = std::min(r[0], v);
        r[1] = std::max(r[1], v);
        ++r[2];
    };
    for (auto [x, y] : S) {
        note(rows, y, x);
        note(cols, x, y);
    }
    for (const auto* m : {&rows, &cols})
        for (const auto& [line, r] : *m)
            if (r[1] - r[0] + 1 != r[2]) return false;
    return true;
}

// Random staircase set: row intervals whose left ends form a valley and whose
// right ends form a peak. Draws are repeated until the oracle accepts one.
inline Region random_staircase(std::mt19937_64& rng, int max_h, int max_w) {
    std::uniform_int_distribution<int> hd(1, max_h), wd(0, max_w - 1), step(0, 2);
    while (true) {
        const int h = hd(rng);
        std::vector<int> lo(h), hi(h);
        const int tl = std::uniform_int_distribution<int>(0, h - 1)(rng);
        const int th = std::uniform_int_distribution<int>(0, h - 1)(rng);
        int a = wd(rng), b = wd(rng);
        if (a > b) std::swap(a, b);
        lo[tl] = a;
        hi[th] = b;
        for (int y = tl - 1; y >= 0; --y) lo[y] = lo[y + 1] + step(rng);
        for (int y = tl + 1; y < h; ++y) lo[y] = lo[y - 1] + step(rng);
        for (int y = th - 1; y >= 0; --y) hi[y] = hi[y + 1] - step(rng);
        for (int y = th + 1; y < h; ++y) hi[y] = hi[y - 1] - step(rng);
        std::vector<Coord> cells;
        CellSet S;
        for (int y = 0; y < h; ++y)
            for (int x = lo[y]; x <= hi[y]; ++x) {
                cells.push_back({x, y});
                S.insert({x, y});
            }
        if (is_staircase(S)) return Region(cells);
    }
}

inline SpinGrid random_grid(std::mt19937_64& rng, int w, int h, double eps) {
    SpinGrid u({0, w - 1, 0, h - 1}, eps);
    std::uniform_int_distribution<int> s(-1, 1);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) u.set({x, y}, s(rng));
    return u;
}

}  // namespace oracle
