#include "beg/hausdorff.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace beg;

namespace {

// Dense sampling of both sets. Each sampled value is a true distance, so the
// sampled supremum is a lower bound that the exact value may exceed by at
// most the sampling spacing.
double sampled_hausdorff(const Region& X, const OctagonSpec& Y, double eps, int n) {
    auto dist_to_X = [&](double px, double py) {
        double best = 1e300;
        for (Coord c : X) {
            const double dx = std::max(0.0, std::abs(px - c.x * eps) - eps / 2);
            const double dy = std::max(0.0, std::abs(py - c.y * eps) - eps / 2);
            best = std::min(best, std::hypot(dx, dy));
        }
        return best;
    };
    double sup = 0.0;
    for (Coord c : X)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                const double px = (c.x - 0.5 + double(i) / n) * eps;
                const double py = (c.y - 0.5 + double(j) / n) * eps;
                sup = std::max(sup, distance_to_octagon(Y, px, py));
            }
    const auto v = Y.vertices();
    for (std::size_t k = 0; k < v.size(); ++k) {
        const auto& a = v[k];
        const auto& b = v[(k + 1) % v.size()];
        for (int i = 0; i <= 40 * n; ++i) {
            const double s = double(i) / (40 * n);
            sup = std::max(sup, dist_to_X(a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])));
        }
    }
    return sup;
}

}  // namespace

TEST_SUITE("hausdorff") {

TEST_CASE("distance to an octagon") {
    const OctagonSpec A = OctagonSpec::from_box(-1, 1, -1, 1, {0.5, 0.5, 0.5, 0.5});
    CHECK(distance_to_octagon(A, 0, 0) == 0.0);
    CHECK(distance_to_octagon(A, 3, 0) == doctest::Approx(2.0));
    // Beyond the cut corner the nearest feature is the diagonal side.
    CHECK(distance_to_octagon(A, 2, 2) == doctest::Approx((4 - 1.5) / std::sqrt(2.0)));
}

TEST_CASE("octagon pairs") {
    const OctagonSpec A = OctagonSpec::from_box(-1, 1, -1, 1, {0.5, 0.5, 0.5, 0.5});
    CHECK(hausdorff_distance(A, A) == 0.0);
    CHECK(hausdorff_distance(A, A.translated(0.3, 0)) == doctest::Approx(0.3));
    const OctagonSpec B = OctagonSpec::from_box(-2, 2, -2, 2, {1, 1, 1, 1});
    // Homothetic by 2 about the origin: the far vertex sits at distance |v|.
    CHECK(hausdorff_distance(A, B) == doctest::Approx(std::hypot(0.5, 1.0)));
}

TEST_CASE("single cell against its own square") {
    const double eps = 0.25;
    const Region X{{0, 0}};
    const OctagonSpec sq = OctagonSpec::from_box(-0.125, 0.125, -0.125, 0.125);
    CHECK(hausdorff_distance(X, sq, eps) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(hausdorff_distance(sq, X, eps) == hausdorff_distance(X, sq, eps));
    CHECK(hausdorff_distance(X, Region{{3, 0}}, eps) == doctest::Approx(0.75));
}

TEST_CASE("discretized octagons agree with dense sampling") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> half(0.2, 0.5), cut(0.0, 0.15), shift(-0.05, 0.05);
    const double eps = 1.0 / 16;
    for (int trial = 0; trial < 12; ++trial) {
        const double h = half(rng);
        const OctagonSpec A = OctagonSpec::from_box(-h, h, -h + shift(rng), h, {cut(rng), cut(rng), cut(rng), cut(rng)});
        const Region X = discretize_octagon(A.translated(shift(rng), shift(rng)), eps);
        REQUIRE_FALSE(X.empty());
        const double exact = hausdorff_distance(X, A, eps);
        const int n = 8;
        const double sampled = sampled_hausdorff(X, A, eps, n);
        CHECK(exact >= sampled - 1e-12);
        CHECK(exact <= sampled + eps / n * std::sqrt(2.0) + 1e-12);
    }
}

}  // TEST_SUITE
