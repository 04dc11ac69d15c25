#include "beg/fixtures.hpp"

#include "beg/dissipation.hpp"
#include "beg/minimize.hpp"

#include <cmath>

namespace beg {

namespace {

OracleFixture make(const std::string& name, const Region& I, const Region& Z, const ModelParams& p) {
    OracleFixture f;
    f.name = name;
    f.params = p;
    f.u_old = SpinGrid::from_phases(I, Z, p.epsilon, 1);
    f.free_cells = Region::rectangle(bounding_rect(set_union(I, Z)));
    return f;
}

}  // namespace

std::vector<OracleFixture> oracle_fixtures() {
    struct Shape {
        const char* name;
        int w, h;
    };
    const Shape shapes[] = {{"1x1", 1, 1}, {"2x1", 2, 1}, {"1x2", 1, 2}, {"3x1", 3, 1}, {"2x2", 2, 2}};
    struct Param {
        const char* name;
        double k, gamma, zeta, eps;
    };
    const Param params[] = {
        {"g3-e8-z1", 0.5, 3.0, 1.0, 1.0 / 8},   {"g3-e4-z0.1", 0.6, 3.0, 0.1, 1.0 / 4},
        {"g1-e8-z1", 0.5, 1.0, 1.0, 1.0 / 8},   {"g1-e4-z0.05", 0.7, 1.0, 0.05, 1.0 / 4},
    };
    std::vector<OracleFixture> out;
    for (const Param& pr : params)
        for (const Shape& s : shapes) {
            const Region I = Region::rectangle({0, s.w - 1, 0, s.h - 1});
            ModelParams p;
            p.k = pr.k;
            p.gamma = pr.gamma;
            p.zeta = pr.zeta;
            p.epsilon = pr.eps;
            out.push_back(make(std::string(s.name) + "/" + pr.name, I, outer_boundary(I), p));
        }

    // Surplus surfactant sitting in the corners of the ring.
    ModelParams p1;
    p1.k = 0.5;
    p1.gamma = 1.0;
    p1.zeta = 1.0;
    p1.epsilon = 1.0 / 8;
    {
        const Region I = Region::rectangle({0, 0, 0, 0});
        out.push_back(make("1x1+1/g1-e8-z1", I, set_union(outer_boundary(I), Region{{-1, -1}}), p1));
        out.push_back(make("1x1+2/g1-e8-z1", I, set_union(outer_boundary(I), Region{{-1, -1}, {1, 1}}), p1));
    }
    {
        const Region I = Region::rectangle({0, 1, 0, 0});
        out.push_back(make("2x1+1/g1-e8-z1", I, set_union(outer_boundary(I), Region{{2, 1}}), p1));
        ModelParams p2 = p1;
        p2.zeta = 0.2;
        out.push_back(make("2x1+2/g1-e8-z0.2", I, set_union(outer_boundary(I), Region{{-1, -1}, {2, 1}}), p2));
    }
    return out;
}

OracleOutcome run_oracle_fixture(const OracleFixture& f) {
    OracleOutcome o;
    o.name = f.name;
    const StructuredResult s = f.params.gamma > 2 ? structured_minimizer_gamma_high(f.u_old, f.params)
                                                  : structured_minimizer_gamma_low(f.u_old, f.params);
    const BruteForceResult b = brute_force_minimizer(f.u_old, f.params, f.free_cells);
    o.structured = s.value.total;
    o.brute = b.value.total;
    o.discrepancy = std::abs(o.structured - o.brute);

    const RectSpec box = s.u.window().united(f.u_old.window());
    for (int y = box.ymin; y <= box.ymax; ++y)
        for (int x = box.xmin; x <= box.xmax; ++x)
            if (s.u.at({x, y}) != f.u_old.at({x, y}) && !f.free_cells.contains({x, y}))
                o.structured_in_window = false;
    return o;
}

}  // namespace beg
