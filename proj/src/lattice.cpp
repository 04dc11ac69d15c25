#include "beg/lattice.hpp"

#include "beg/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>

namespace beg {

RectSpec RectSpec::united(const RectSpec& o) const {
    if (empty()) return o;
    if (o.empty()) return *this;
    return {std::min(xmin, o.xmin), std::max(xmax, o.xmax), std::min(ymin, o.ymin), std::max(ymax, o.ymax)};
}

Region::Region(std::initializer_list<Coord> cells) : Region(std::vector<Coord>(cells)) {}

Region::Region(std::vector<Coord> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

Region Region::from_sorted_unique(std::vector<Coord> cells) {
    Region r;
    r.cells_ = std::move(cells);
    return r;
}

Region Region::rectangle(const RectSpec& r) {
    std::vector<Coord> cells;
    cells.reserve(std::size_t(std::max<std::int64_t>(0, r.area())));
    for (int y = r.ymin; y <= r.ymax; ++y)
        for (int x = r.xmin; x <= r.xmax; ++x) cells.push_back({x, y});
    return from_sorted_unique(std::move(cells));
}

bool Region::contains(Coord c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

Region Region::translated(Coord d) const {
    std::vector<Coord> out;
    out.reserve(cells_.size());
    for (Coord c : cells_) out.push_back(c + d);
    return from_sorted_unique(std::move(out));
}

bool Region::is_subset_of(const Region& other) const {
    return std::includes(other.cells_.begin(), other.cells_.end(), cells_.begin(), cells_.end());
}

Region set_union(const Region& a, const Region& b) {
    std::vector<Coord> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Region::from_sorted_unique(std::move(out));
}

Region set_difference(const Region& a, const Region& b) {
    std::vector<Coord> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Region::from_sorted_unique(std::move(out));
}

Region set_intersection(const Region& a, const Region& b) {
    std::vector<Coord> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Region::from_sorted_unique(std::move(out));
}

Region symmetric_difference(const Region& a, const Region& b) {
    std::vector<Coord> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Region::from_sorted_unique(std::move(out));
}

CellMask::CellMask(const RectSpec& box) : box_(box), bits_(std::size_t(std::max<std::int64_t>(0, box.area())), 0) {}

CellMask::CellMask(const Region& r, int margin) {
    box_ = r.empty() ? RectSpec{0, 0, 0, 0} : bounding_rect(r).dilated(margin);
    bits_.assign(std::size_t(box_.area()), 0);
    for (Coord c : r) set(c);
}

int CellMask::count_neighbours(Coord c) const {
    int n = 0;
    for (Coord q : neighbors(c)) n += test(q) ? 1 : 0;
    return n;
}

SpinGrid::SpinGrid(const RectSpec& window, double epsilon, int fill)
    : window_(window), epsilon_(epsilon) {
    if (window.empty()) throw PreconditionError("SpinGrid window must be nonempty");
    if (!(epsilon > 0)) throw ValidationError("lattice spacing epsilon must be positive");
    if (fill < -1 || fill > 1) throw ValidationError("spin values must be -1, 0 or +1");
    spins_.assign(std::size_t(window.area()), std::int8_t(fill));
}

SpinGrid SpinGrid::from_phases(const Region& plus, const Region& zero, double epsilon, int margin) {
    RectSpec w{0, 0, 0, 0};
    Region both = set_union(plus, zero);
    if (!both.empty()) w = bounding_rect(both).dilated(margin);
    SpinGrid u(w, epsilon, -1);
    for (Coord c : zero) u.set(c, 0);
    for (Coord c : plus) u.set(c, 1);
    return u;
}

void SpinGrid::set(Coord c, int spin) {
    if (!window_.contains(c)) throw PreconditionError("SpinGrid::set outside the window");
    if (spin < -1 || spin > 1) throw ValidationError("spin values must be -1, 0 or +1");
    spins_[index(c)] = std::int8_t(spin);
}

Region SpinGrid::phase(int spin) const {
    std::vector<Coord> out;
    for (int y = window_.ymin; y <= window_.ymax; ++y)
        for (int x = window_.xmin; x <= window_.xmax; ++x)
            if (spins_[index({x, y})] == spin) out.push_back({x, y});
    return Region::from_sorted_unique(std::move(out));
}

bool SpinGrid::same_configuration(const SpinGrid& other) const {
    RectSpec w = window_.united(other.window_);
    for (int y = w.ymin; y <= w.ymax; ++y)
        for (int x = w.xmin; x <= w.xmax; ++x)
            if (at({x, y}) != other.at({x, y})) return false;
    return true;
}

SpinGrid SpinGrid::with_window(const RectSpec& w) const {
    SpinGrid out(w, epsilon_, -1);
    for (int y = window_.ymin; y <= window_.ymax; ++y)
        for (int x = window_.xmin; x <= window_.xmax; ++x) {
            int s = spins_[index({x, y})];
            if (s != -1) out.set({x, y}, s);
        }
    return out;
}

std::array<Coord, 4> neighbors(Coord p) {
    return {Coord{p.x + 1, p.y}, Coord{p.x - 1, p.y}, Coord{p.x, p.y + 1}, Coord{p.x, p.y - 1}};
}

int dist_index(Coord p, Coord q, Norm norm) {
    int dx = std::abs(p.x - q.x), dy = std::abs(p.y - q.y);
    return norm == Norm::L1 ? dx + dy : std::max(dx, dy);
}

double dist(Coord p, Coord q, Norm norm, double epsilon) { return epsilon * dist_index(p, q, norm); }

int dist_to_boundary_index(Coord p, const Region& I, Norm norm) {
    if (I.empty()) throw PreconditionError("distance to the boundary of an empty region");
    int best = std::numeric_limits<int>::max();
    if (!I.contains(p)) {
        for (Coord q : I) best = std::min(best, dist_index(p, q, norm));
        return best;
    }
    // The nearest complement cell is always adjacent to I, so the bounding
    // rectangle dilated by one cell is a sufficient search area.
    RectSpec box = bounding_rect(I).dilated(1);
    CellMask mask(I, 1);
    for (int y = box.ymin; y <= box.ymax; ++y)
        for (int x = box.xmin; x <= box.xmax; ++x)
            if (!mask.test({x, y})) best = std::min(best, dist_index(p, {x, y}, norm));
    return best;
}

double dist_to_boundary(Coord p, const Region& I, Norm norm, double epsilon) {
    return epsilon * dist_to_boundary_index(p, I, norm);
}

BoundaryDistanceField::BoundaryDistanceField(const Region& I, const RectSpec& box) : box_(box) {
    if (I.empty()) throw PreconditionError("boundary distance field of an empty region");
    RectSpec b = bounding_rect(I);
    if (!box.contains({b.xmin, b.ymin}) || !box.contains({b.xmax, b.ymax}))
        throw PreconditionError("boundary distance field box must contain the region");
    const int w = box.width(), h = box.height();
    const int inf = std::numeric_limits<int>::max() / 4;
    CellMask mask(I, 0);
    // Two independent L1 transforms: distance to I (for outside cells) and
    // distance to the complement (for inside cells). Cells outside the box count
    // as complement, which is what makes the inside values exact.
    std::vector<int> to_in(std::size_t(w) * h, inf), to_out(std::size_t(w) * h, inf);
    auto at = [w](std::vector<int>& v, int x, int y) -> int& { return v[std::size_t(y) * w + x]; };
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            bool in = mask.test({x + box.xmin, y + box.ymin});
            (in ? at(to_in, x, y) : at(to_out, x, y)) = 0;
        }
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (auto* v : {&to_in, &to_out}) {
                int& c = at(*v, x, y);
                int left = x > 0 ? at(*v, x - 1, y) : (v == &to_out ? 0 : inf);
                int down = y > 0 ? at(*v, x, y - 1) : (v == &to_out ? 0 : inf);
                c = std::min({c, left + 1, down + 1});
            }
    for (int y = h - 1; y >= 0; --y)
        for (int x = w - 1; x >= 0; --x)
            for (auto* v : {&to_in, &to_out}) {
                int& c = at(*v, x, y);
                int right = x + 1 < w ? at(*v, x + 1, y) : (v == &to_out ? 0 : inf);
                int up = y + 1 < h ? at(*v, x, y + 1) : (v == &to_out ? 0 : inf);
                c = std::min({c, right + 1, up + 1});
            }
    d_.resize(std::size_t(w) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            d_[std::size_t(y) * w + x] = mask.test({x + box.xmin, y + box.ymin}) ? at(to_out, x, y) : at(to_in, x, y);
}

int BoundaryDistanceField::at(Coord c) const {
    if (!box_.contains(c)) throw PreconditionError("boundary distance requested outside the field box");
    return d_[std::size_t(c.y - box_.ymin) * box_.width() + (c.x - box_.xmin)];
}

Region outer_boundary(const Region& I) {
    if (I.empty()) return {};
    CellMask mask(I, 1);
    std::vector<Coord> out;
    const RectSpec& b = mask.box();
    for (int y = b.ymin; y <= b.ymax; ++y)
        for (int x = b.xmin; x <= b.xmax; ++x)
            if (!mask.test({x, y}) && mask.count_neighbours({x, y}) > 0) out.push_back({x, y});
    return Region::from_sorted_unique(std::move(out));
}

Region inner_boundary(const Region& I) {
    if (I.empty()) return {};
    CellMask mask(I, 1);
    std::vector<Coord> out;
    for (Coord c : I)
        if (mask.count_neighbours(c) < 4) out.push_back(c);
    return Region::from_sorted_unique(std::move(out));
}

std::vector<Region> connected_components(const Region& I, Connectivity mode) {
    std::vector<Region> comps;
    if (I.empty()) return comps;
    CellMask todo(I, 1);
    std::vector<Coord> steps = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    if (mode == Connectivity::Weak) {
        for (Coord d : std::vector<Coord>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) steps.push_back(d);
    }
    for (Coord seed : I) {
        if (!todo.test(seed)) continue;
        std::vector<Coord> comp;
        std::deque<Coord> queue{seed};
        todo.set(seed, false);
        while (!queue.empty()) {
            Coord c = queue.front();
            queue.pop_front();
            comp.push_back(c);
            for (Coord d : steps) {
                Coord q = c + d;
                if (todo.test(q)) {
                    todo.set(q, false);
                    queue.push_back(q);
                }
            }
        }
        comps.emplace_back(std::move(comp));
    }
    return comps;
}

SliceDecomposition slices(const Region& I) {
    SliceDecomposition s;
    // Rows come for free from the row-major storage.
    for (std::size_t i = 0; i < I.size();) {
        const auto& cells = I.cells();
        std::size_t j = i;
        while (j + 1 < I.size() && cells[j + 1].y == cells[i].y && cells[j + 1].x == cells[j].x + 1) ++j;
        s.horizontal.push_back({cells[i].y, cells[i].x, cells[j].x});
        i = j + 1;
    }
    std::vector<Coord> by_column(I.begin(), I.end());
    std::sort(by_column.begin(), by_column.end(), [](Coord a, Coord b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    for (std::size_t i = 0; i < by_column.size();) {
        std::size_t j = i;
        while (j + 1 < by_column.size() && by_column[j + 1].x == by_column[i].x &&
               by_column[j + 1].y == by_column[j].y + 1)
            ++j;
        s.vertical.push_back({by_column[i].x, by_column[i].y, by_column[j].y});
        i = j + 1;
    }
    s.n_h = int(s.horizontal.size());
    s.n_v = int(s.vertical.size());
    return s;
}

bool is_horizontally_convex(const Region& I) {
    auto s = slices(I);
    for (std::size_t i = 1; i < s.horizontal.size(); ++i)
        if (s.horizontal[i].line == s.horizontal[i - 1].line) return false;
    return true;
}

bool is_vertically_convex(const Region& I) {
    auto s = slices(I);
    for (std::size_t i = 1; i < s.vertical.size(); ++i)
        if (s.vertical[i].line == s.vertical[i - 1].line) return false;
    return true;
}

bool is_staircase(const Region& I) {
    if (I.empty()) return false;
    return is_horizontally_convex(I) && is_vertically_convex(I) &&
           connected_components(I, Connectivity::Strong).size() == 1;
}

RectSpec bounding_rect(const Region& I) {
    if (I.empty()) throw PreconditionError("bounding rectangle of an empty region");
    RectSpec r{I.begin()->x, I.begin()->x, I.cells().front().y, I.cells().back().y};
    for (Coord c : I) {
        r.xmin = std::min(r.xmin, c.x);
        r.xmax = std::max(r.xmax, c.x);
    }
    return r;
}

std::int64_t boundary_edge_count(const Region& I) {
    if (I.empty()) return 0;
    CellMask mask(I, 1);
    std::int64_t n = 0;
    for (Coord c : I) n += 4 - mask.count_neighbours(c);
    return n;
}

double perimeter(const Region& I, double epsilon) {
    if (I.empty()) throw PreconditionError("perimeter of an empty region");
    return epsilon * double(boundary_edge_count(I));
}

double perimeter_from_slices(const Region& I, double epsilon) {
    if (I.empty()) throw PreconditionError("perimeter of an empty region");
    auto s = slices(I);
    return 2.0 * epsilon * (s.n_h + s.n_v);
}

Region concave_cells(const Region& I) {
    if (I.empty()) return {};
    CellMask mask(I, 1);
    std::vector<Coord> out;
    for (Coord c : outer_boundary(I))
        if (mask.count_neighbours(c) == 2) out.push_back(c);
    return Region::from_sorted_unique(std::move(out));
}

std::int64_t outer_boundary_count(const Region& I) {
    if (!is_staircase(I)) throw PreconditionError("outer_boundary_count requires a staircase set");
    auto s = slices(I);
    return 2 * std::int64_t(s.n_h + s.n_v) - std::int64_t(concave_cells(I).size());
}

CornerCells corner_cells(const SpinGrid& u) {
    Region I = u.plus();
    CornerCells out;
    if (!I.empty()) {
        CellMask mask(I, 1);
        std::vector<Coord> inner, outer;
        for (Coord c : inner_boundary(I))
            if (mask.count_neighbours(c) == 2) inner.push_back(c);
        for (Coord c : outer_boundary(I))
            if (mask.count_neighbours(c) == 2) outer.push_back(c);
        out.inner = Region::from_sorted_unique(std::move(inner));
        out.outer = Region::from_sorted_unique(std::move(outer));
    }
    // u(p) = u(p+a) = u(p+b) = 0 and u(p-a) = u(p-b) != 0 for one of the four
    // rotations of the pair (a, b) = (e2, e1).
    static constexpr std::array<std::pair<Coord, Coord>, 4> frames = {{
        {{0, 1}, {1, 0}}, {{-1, 0}, {0, 1}}, {{0, -1}, {-1, 0}}, {{1, 0}, {0, -1}}}};
    std::vector<Coord> corner;
    for (Coord p : u.zero()) {
        for (auto [a, b] : frames) {
            if (u.at(p + a) != 0 || u.at(p + b) != 0) continue;
            int s1 = u.at(p - a), s2 = u.at(p - b);
            if (s1 == s2 && s1 != 0) {
                corner.push_back(p);
                break;
            }
        }
    }
    out.surfactant_in_corner = Region::from_sorted_unique(std::move(corner));
    return out;
}

}  // namespace beg
