#include "beg/lattice.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace beg;

TEST_SUITE("lattice") {

TEST_CASE("region keeps cells sorted and unique") {
    const Region r{{2, 0}, {0, 1}, {1, 0}, {2, 0}};
    REQUIRE(r.size() == 3);
    CHECK(r.cells()[0] == Coord{1, 0});
    CHECK(r.cells()[1] == Coord{2, 0});
    CHECK(r.cells()[2] == Coord{0, 1});
    CHECK(r.contains({0, 1}));
    CHECK_FALSE(r.contains({0, 0}));
}

TEST_CASE("set algebra") {
    const Region a = Region::rectangle({0, 2, 0, 0});
    const Region b = Region::rectangle({1, 3, 0, 0});
    CHECK(set_union(a, b) == Region::rectangle({0, 3, 0, 0}));
    CHECK(set_intersection(a, b) == Region::rectangle({1, 2, 0, 0}));
    CHECK(set_difference(a, b) == Region{{0, 0}});
    CHECK(symmetric_difference(a, b) == Region{{0, 0}, {3, 0}});
    CHECK(a.translated({0, 5}) == Region::rectangle({0, 2, 5, 5}));
    CHECK(set_intersection(a, b).is_subset_of(a));
}

TEST_CASE("spin grid reads -1 outside its window") {
    SpinGrid u({0, 1, 0, 1}, 0.25);
    u.set({0, 0}, 1);
    u.set({1, 1}, 0);
    CHECK(u.at({0, 0}) == 1);
    CHECK(u.at({1, 1}) == 0);
    CHECK(u.at({5, 5}) == -1);
    CHECK(u.plus() == Region{{0, 0}});
    CHECK(u.zero() == Region{{1, 1}});
    CHECK(u.same_configuration(u.with_window({-3, 4, -3, 4})));
}

TEST_CASE("distances") {
    CHECK(dist_index({0, 0}, {3, -4}, Norm::L1) == 7);
    CHECK(dist_index({0, 0}, {3, -4}, Norm::Linf) == 4);
    CHECK(dist({0, 0}, {3, -4}, Norm::L1, 0.5) == 3.5);
}

TEST_CASE("2 rows by 3 columns has perimeter 10 eps") {
    const Region r = Region::rectangle({0, 2, 0, 1});
    const SliceDecomposition s = slices(r);
    CHECK(s.n_h == 2);
    CHECK(s.n_v == 3);
    CHECK(perimeter_from_slices(r, 0.125) == 10 * 0.125);
    CHECK(perimeter(r, 0.125) == 10 * 0.125);
}

TEST_CASE("slices come out in ascending order") {
    const Region L{{0, 0}, {1, 0}, {2, 0}, {0, 1}};
    const SliceDecomposition s = slices(L);
    REQUIRE(s.horizontal.size() == 2);
    CHECK(s.horizontal[0] == Slice{0, 0, 2});
    CHECK(s.horizontal[1] == Slice{1, 0, 0});
    REQUIRE(s.vertical.size() == 3);
    CHECK(s.vertical[0] == Slice{0, 0, 1});
    CHECK(s.vertical[2] == Slice{2, 0, 0});
}

TEST_CASE("staircase predicate") {
    CHECK(is_staircase(Region{{0, 0}, {1, 0}, {0, 1}}));
    // A U shape is not vertically convex along its middle column.
    const Region U{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}};
    CHECK(is_horizontally_convex(Region{{0, 0}, {1, 0}}));
    CHECK_FALSE(is_horizontally_convex(U));
    CHECK_FALSE(is_staircase(U));
    // Diagonal neighbours are only weakly connected.
    const Region diag{{0, 0}, {1, 1}};
    CHECK_FALSE(is_staircase(diag));
    CHECK(connected_components(diag, Connectivity::Strong).size() == 2);
    CHECK(connected_components(diag, Connectivity::Weak).size() == 1);
}

TEST_CASE("boundaries against the brute-force oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const Region I = oracle::random_staircase(rng, 8, 8);
        const auto S = oracle::to_set(I);
        CHECK(oracle::to_set(outer_boundary(I)) == oracle::touching_cells(S, 1));
        CHECK(outer_boundary_count(I) == std::int64_t(oracle::touching_cells(S, 1).size()));
        CHECK(oracle::to_set(concave_cells(I)) == oracle::touching_cells(S, 0, 2));
        CHECK(boundary_edge_count(I) == oracle::boundary_edges(S));
        CHECK(is_staircase(I));
        // Perimeter through slices, and the outer boundary through the perimeter.
        const SliceDecomposition sl = slices(I);
        CHECK(oracle::boundary_edges(S) == 2 * (sl.n_h + sl.n_v));
        CHECK(std::int64_t(oracle::touching_cells(S, 1).size()) ==
              oracle::boundary_edges(S) - std::int64_t(oracle::touching_cells(S, 0, 2).size()));
    }
}

TEST_CASE("inner boundary and boundary distance") {
    const Region I = Region::rectangle({0, 4, 0, 3});
    const auto S = oracle::to_set(I);
    for (Coord c : inner_boundary(I)) CHECK(oracle::d1_to_boundary({c.x, c.y}, S) == 1);
    const RectSpec box = bounding_rect(I).dilated(2);
    const BoundaryDistanceField field(I, box);
    for (int y = box.ymin; y <= box.ymax; ++y)
        for (int x = box.xmin; x <= box.xmax; ++x) {
            CHECK(field.at({x, y}) == oracle::d1_to_boundary({x, y}, S));
            CHECK(dist_to_boundary_index({x, y}, I, Norm::L1) == oracle::d1_to_boundary({x, y}, S));
        }
}

TEST_CASE("corner cells") {
    // A 2x2 block ringed by its outer boundary: no cell of the ring touches two block cells.
    const Region I = Region::rectangle({0, 1, 0, 1});
    const SpinGrid u = SpinGrid::from_phases(I, outer_boundary(I), 0.25);
    const CornerCells cc = corner_cells(u);
    CHECK(cc.surfactant_in_corner.empty());
    CHECK(cc.inner.size() == 4);
    CHECK(concave_cells(I).empty());

    // An L of surfactant with the -1 sea below and to the left of its elbow.
    const SpinGrid l = SpinGrid::from_phases({}, Region{{0, 0}, {1, 0}, {0, 1}}, 0.25);
    CHECK(corner_cells(l).surfactant_in_corner == Region{{0, 0}});
}

}  // TEST_SUITE
