#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace beg {

// Integer lattice index. The physical point is epsilon * (x, y).
struct Coord {
    int x = 0;
    int y = 0;

    friend constexpr bool operator==(Coord a, Coord b) = default;
    // Row-major order: rows by ascending y, then ascending x within a row.
    friend constexpr std::strong_ordering operator<=>(Coord a, Coord b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
    constexpr Coord operator+(Coord o) const { return {x + o.x, y + o.y}; }
    constexpr Coord operator-(Coord o) const { return {x - o.x, y - o.y}; }
};

struct RectSpec {
    int xmin = 0;
    int xmax = -1;
    int ymin = 0;
    int ymax = -1;

    bool empty() const { return xmin > xmax || ymin > ymax; }
    int width() const { return empty() ? 0 : xmax - xmin + 1; }
    int height() const { return empty() ? 0 : ymax - ymin + 1; }
    std::int64_t area() const { return std::int64_t(width()) * height(); }
    bool contains(Coord c) const {
        return c.x >= xmin && c.x <= xmax && c.y >= ymin && c.y <= ymax;
    }
    RectSpec dilated(int n) const { return {xmin - n, xmax + n, ymin - n, ymax + n}; }
    RectSpec united(const RectSpec& o) const;
    friend bool operator==(const RectSpec&, const RectSpec&) = default;
};

// Finite set of lattice cells, stored sorted in row-major order.
class Region {
public:
    Region() = default;
    Region(std::initializer_list<Coord> cells);
    explicit Region(std::vector<Coord> cells);
    static Region from_sorted_unique(std::vector<Coord> cells);
    static Region rectangle(const RectSpec& r);

    bool contains(Coord c) const;
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const std::vector<Coord>& cells() const { return cells_; }
    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }

    Region translated(Coord d) const;
    bool is_subset_of(const Region& other) const;

    friend bool operator==(const Region&, const Region&) = default;

private:
    std::vector<Coord> cells_;
};

Region set_union(const Region& a, const Region& b);
Region set_difference(const Region& a, const Region& b);
Region set_intersection(const Region& a, const Region& b);
Region symmetric_difference(const Region& a, const Region& b);

// Dense membership table over a rectangle; cells outside the box are absent.
class CellMask {
public:
    CellMask() = default;
    CellMask(const Region& r, int margin);
    CellMask(const RectSpec& box);

    const RectSpec& box() const { return box_; }
    bool test(Coord c) const {
        if (!box_.contains(c)) return false;
        return bits_[index(c)] != 0;
    }
    void set(Coord c, bool v = true) { bits_[index(c)] = v ? 1 : 0; }
    std::size_t index(Coord c) const {
        return std::size_t(c.y - box_.ymin) * std::size_t(box_.width()) + std::size_t(c.x - box_.xmin);
    }
    int count_neighbours(Coord c) const;

private:
    RectSpec box_;
    std::vector<std::uint8_t> bits_;
};

// Spin configuration on a finite window; every cell outside reads -1.
class SpinGrid {
public:
    SpinGrid() = default;
    SpinGrid(const RectSpec& window, double epsilon, int fill = -1);
    static SpinGrid from_phases(const Region& plus, const Region& zero, double epsilon, int margin = 1);

    const RectSpec& window() const { return window_; }
    double epsilon() const { return epsilon_; }
    int at(Coord c) const {
        if (!window_.contains(c)) return -1;
        return spins_[index(c)];
    }
    void set(Coord c, int spin);

    Region phase(int spin) const;
    Region plus() const { return phase(1); }
    Region zero() const { return phase(0); }

    // Same spins everywhere on the lattice (windows may differ).
    bool same_configuration(const SpinGrid& other) const;
    SpinGrid with_window(const RectSpec& w) const;

private:
    std::size_t index(Coord c) const {
        return std::size_t(c.y - window_.ymin) * std::size_t(window_.width()) + std::size_t(c.x - window_.xmin);
    }
    RectSpec window_{0, 0, 0, 0};
    double epsilon_ = 1.0;
    std::vector<std::int8_t> spins_ = std::vector<std::int8_t>(1, -1);
};

enum class Norm { L1, Linf };
enum class Connectivity { Strong, Weak };

std::array<Coord, 4> neighbors(Coord p);

int dist_index(Coord p, Coord q, Norm norm);
double dist(Coord p, Coord q, Norm norm, double epsilon);

// Distance of p from the discrete boundary of I: to the nearest cell of I when
// p lies outside, to the nearest cell of the complement when p lies inside.
int dist_to_boundary_index(Coord p, const Region& I, Norm norm);
double dist_to_boundary(Coord p, const Region& I, Norm norm, double epsilon);

// L1 boundary distance (in index units) for every cell of `box`, which must contain I.
class BoundaryDistanceField {
public:
    BoundaryDistanceField(const Region& I, const RectSpec& box);
    const RectSpec& box() const { return box_; }
    int at(Coord c) const;

private:
    RectSpec box_;
    std::vector<int> d_;
};

Region outer_boundary(const Region& I);
Region inner_boundary(const Region& I);

std::vector<Region> connected_components(const Region& I, Connectivity mode);

struct Slice {
    int line;  // row for horizontal slices, column for vertical ones
    int lo;
    int hi;
    friend bool operator==(const Slice&, const Slice&) = default;
};

struct SliceDecomposition {
    std::vector<Slice> horizontal;  // ascending row
    std::vector<Slice> vertical;    // ascending column
    int n_h = 0;
    int n_v = 0;
};

SliceDecomposition slices(const Region& I);

bool is_horizontally_convex(const Region& I);
bool is_vertically_convex(const Region& I);
bool is_staircase(const Region& I);

RectSpec bounding_rect(const Region& I);

// Number of unit edges between I and its complement.
std::int64_t boundary_edge_count(const Region& I);
double perimeter(const Region& I, double epsilon);
// 2 epsilon (n_h + n_v); equal to perimeter() on staircase sets.
double perimeter_from_slices(const Region& I, double epsilon);

// Complement cells with exactly two neighbours in I.
Region concave_cells(const Region& I);
std::int64_t outer_boundary_count(const Region& I);

struct CornerCells {
    Region inner;
    Region outer;
    Region surfactant_in_corner;
};
CornerCells corner_cells(const class SpinGrid& u);

}  // namespace beg
