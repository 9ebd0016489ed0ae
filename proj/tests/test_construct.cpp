#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "tdesign/construct.hpp"
#include "tdesign/harmonic.hpp"

using namespace tdesign;

namespace {

LayeredDesign layers(const WeightedPointSet& x) { return layer_decompose(x); }

std::vector<double> random_distinct_radii(int p, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(0.4, 2.6);
    std::vector<double> radii;
    while (static_cast<int>(radii.size()) < p) {
        const double r = dist(rng);
        bool ok = true;
        for (double q : radii) ok = ok && std::abs(q - r) > 0.05;
        if (ok) radii.push_back(r);
    }
    std::sort(radii.begin(), radii.end());
    return radii;
}

}  // namespace

TEST_CASE("star_lift_point") {
    const std::vector<double> e1{1.0, 0.0};
    CHECK(star_lift_point(e1, 0.0) == std::vector<double>{1.0, 0.0, 0.0});
    const std::vector<double> y34{3.0, 4.0};
    const std::vector<double> pole = star_lift_point(y34, 1.0);
    CHECK(pole[0] == 0.0);
    CHECK(pole[1] == 0.0);
    CHECK(pole[2] == doctest::Approx(5.0).epsilon(1e-15));
    const std::vector<double> z = star_lift_point(e1, 1.0 / std::sqrt(3.0));
    CHECK(z[0] == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
    CHECK(z[1] == 0.0);
    CHECK(z[2] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(std::hypot(z[0], z[1], z[2]) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(star_lift_point(e1, 1.5), std::invalid_argument);
}

TEST_CASE("tight_polygon_design: structure and weights") {
    SUBCASE("t=5 single radius is the regular hexagon with unit weights") {
        const WeightedPointSet hex = tight_polygon_design(5, {1.0});
        REQUIRE(hex.size() == 6);
        std::multiset<int> angles;
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(hex.weight(i) == 1.0);
            CHECK(hex.norm(i) == doctest::Approx(1.0).epsilon(1e-15));
            const double a = std::atan2(hex.point(i)[1], hex.point(i)[0]);
            angles.insert(static_cast<int>(std::lround(a * 6 / std::numbers::pi)) % 12);
        }
        // vertices sit at odd multiples of pi/6
        CHECK(angles == std::multiset<int>{-5, -3, -1, 1, 3, 5});
    }
    SUBCASE("t=4 with radii {1,2}: two triangles, outer weight 1/8") {
        const WeightedPointSet x = tight_polygon_design(4, {1.0, 2.0});
        REQUIRE(x.size() == 6);
        for (std::size_t i = 0; i < 3; ++i) CHECK(x.weight(i) == doctest::Approx(1.0));
        for (std::size_t i = 3; i < 6; ++i)
            CHECK(x.weight(i) == doctest::Approx(1.0 / 8.0).epsilon(1e-15));
        CHECK(verify_euclidean_design(x, 4).pass);
        // the two triangles are rotated pi/3 apart
        const double a1 = std::atan2(x.point(0)[1], x.point(0)[0]);
        const double a2 = std::atan2(x.point(3)[1], x.point(3)[0]);
        const double diff = std::fmod(std::abs(a1 - a2), 2 * std::numbers::pi / 3);
        CHECK(std::min(diff, 2 * std::numbers::pi / 3 - diff) ==
              doctest::Approx(std::numbers::pi / 3).epsilon(1e-12));
    }
    SUBCASE("odd t gives an antipodal design, even t does not") {
        const WeightedPointSet odd = tight_polygon_design(7, {1.0, 1.7});
        CHECK(odd.size() == 12);  // m = 6
        CHECK(is_antipodal(odd, 1e-9));
        CHECK_FALSE(is_antipodal(tight_polygon_design(4, {1.0, 2.0}), 1e-9));
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(tight_polygon_design(1, {1.0, 2.0}), std::invalid_argument);
        CHECK_THROWS_AS(tight_polygon_design(5, {1.0, 1.0}), std::invalid_argument);
        CHECK_THROWS_AS(tight_polygon_design(5, {-1.0}), std::invalid_argument);
        CHECK_THROWS_AS(tight_polygon_design(0, {1.0}), std::invalid_argument);
        CHECK_THROWS_AS(tight_polygon_design(5, {}), std::invalid_argument);
    }
}

TEST_CASE("polygon weights stay positive over random radius sets") {
    std::mt19937 rng(31337);
    int built = 0;
    while (built < 1000) {
        std::uniform_int_distribution<int> tdist(1, 13);
        const int t = tdist(rng);
        const int pmax = (t + 5) / 4;
        const int p = 1 + static_cast<int>(rng() % pmax);
        const WeightedPointSet x = tight_polygon_design(t, random_distinct_radii(p, rng));
        for (std::size_t i = 0; i < x.size(); ++i) CHECK(x.weight(i) > 0.0);
        ++built;
    }
}

TEST_CASE("Vandermonde cancellation behind the polygon weights") {
    // sum_{k=2}^p r_k^{2 s1} prod_{l != k} (r1^2-r_l^2)/(r_k^2-r_l^2) = r1^{2 s1}
    std::mt19937 rng(8);
    for (int p = 2; p <= 4; ++p) {
        for (int trial = 0; trial < 50; ++trial) {
            const std::vector<double> r = random_distinct_radii(p, rng);
            for (int s1 = 0; s1 <= p - 2; ++s1) {
                double sum = 0.0;
                for (int k = 2; k <= p; ++k) {
                    double prod = 1.0;
                    for (int l = 2; l <= p; ++l) {
                        if (l == k) continue;
                        prod *= (r[0] * r[0] - r[l - 1] * r[l - 1]) /
                                (r[k - 1] * r[k - 1] - r[l - 1] * r[l - 1]);
                    }
                    sum += ipow(r[k - 1], 2 * s1) * prod;
                }
                const double expected = ipow(r[0], 2 * s1);
                CHECK(std::abs(sum - expected) <= 1e-10 * std::max(1.0, std::abs(expected)));
            }
        }
    }
}

TEST_CASE("the k-dependent rotation offset is essential for p >= 2") {
    // Rotating layer k back by k pi / m reproduces the offset-free variant;
    // it must stop verifying.
    const int t = 4;
    const std::vector<double> radii{1.0, 2.0};
    const WeightedPointSet good = tight_polygon_design(t, radii);
    const int m = t + 3 - 2 * static_cast<int>(radii.size());
    std::vector<std::vector<double>> pts;
    std::vector<double> w;
    for (std::size_t i = 0; i < good.size(); ++i) {
        const int k = 1 + static_cast<int>(i) / m;
        const double back = -k * std::numbers::pi / m;
        const double c = std::cos(back), s = std::sin(back);
        const std::vector<double>& p = good.point(i);
        pts.push_back({c * p[0] - s * p[1], s * p[0] + c * p[1]});
        w.push_back(good.weight(i));
    }
    const WeightedPointSet misaligned(2, pts, w);
    CHECK(verify_euclidean_design(good, t).pass);
    CHECK_FALSE(verify_euclidean_design(misaligned, t).pass);
}

TEST_CASE("lift plans") {
    const LiftPlan plan = make_lift_plan(3, 5);
    CHECK(plan.source_dim == 2);
    CHECK(plan.interval.n == 3);
    CHECK(plan.interval.nodes.size() == 3);
    CHECK_THROWS_AS(make_lift_plan(2, 5), std::invalid_argument);
    // a plan for the wrong source dimension is rejected
    const WeightedPointSet hex = tight_polygon_design(5, {1.0});
    const WeightedPointSet in3 = lift_design(hex, plan);
    CHECK(in3.dim() == 3);
    CHECK_THROWS_AS(lift_design(in3, plan), std::invalid_argument);
}

TEST_CASE("lift_design") {
    SUBCASE("hexagon lifts to an 18-point 5-design in R^3") {
        const WeightedPointSet hex = tight_polygon_design(5, {1.0});
        const WeightedPointSet lifted = lift_design(hex, 5);
        CHECK(lifted.dim() == 3);
        CHECK(lifted.size() == 18);  // 6 * (floor(5/2)+1)
        CHECK(verify_euclidean_design(lifted, 5).pass);
        CHECK(verify_design_harmonic(lifted, 5).pass);
    }
    SUBCASE("norm spectrum and layer masses survive the lift") {
        const WeightedPointSet src = tight_polygon_design(4, {1.0, 2.0});
        const WeightedPointSet lifted = lift_design(src, 4);
        CHECK(lifted.size() == 18);
        const LayeredDesign before = layers(src);
        const LayeredDesign after = layers(lifted);
        REQUIRE(after.layer_count() == before.layer_count());
        for (std::size_t l = 0; l < before.layer_count(); ++l) {
            CHECK(std::abs(after.radii[l] - before.radii[l]) <= 1e-12 * before.radii[l]);
            CHECK(std::abs(after.layer_mass[l] - before.layer_mass[l]) <=
                  1e-12 * before.layer_mass[l]);
        }
    }
    SUBCASE("t=0 keeps the point count and puts all mass at the equator") {
        const WeightedPointSet hex = tight_polygon_design(5, {1.0});
        const WeightedPointSet lifted = lift_design(hex, 0);
        CHECK(lifted.size() == 6);
        for (std::size_t i = 0; i < lifted.size(); ++i) CHECK(lifted.point(i)[2] == 0.0);
    }
}

TEST_CASE("lift_to_dimension") {
    const WeightedPointSet seed = tight_polygon_design(5, {1.0, 2.0});  // p=2, m=4, 8 points
    REQUIRE(seed.size() == 8);
    SUBCASE("identity at n=2") {
        CHECK(lift_to_dimension(seed, 2, 5).size() == 8);
    }
    SUBCASE("Corollary-style size formula p(t+3-2p) (floor(t/2)+1)^{n-2}") {
        const WeightedPointSet d3 = lift_to_dimension(seed, 3, 5);
        CHECK(d3.size() == 24);
        CHECK(verify_euclidean_design(d3, 5).pass);
        const WeightedPointSet d4 = lift_to_dimension(seed, 4, 5);
        CHECK(d4.size() == 72);
        CHECK(verify_euclidean_design(d4, 5).pass);
    }
    SUBCASE("hexagon to R^3") {
        const WeightedPointSet d3 = lift_to_dimension(tight_polygon_design(5, {1.0}), 3, 5);
        CHECK(d3.size() == 18);
        CHECK(verify_euclidean_design(d3, 5).pass);
    }
}

TEST_CASE("lattice shells") {
    CHECK(lattice_shell(3, 1).size() == 6);    // octahedron
    CHECK(lattice_shell(3, 2).size() == 12);   // cuboctahedron
    CHECK(lattice_shell(3, 3).size() == 8);    // cube
    CHECK(lattice_shell(4, 4).size() == 16);
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            const std::vector<std::vector<int>> shell = lattice_shell(n, k);
            CHECK(shell.size() ==
                  (BigInt(1) << k) * binomial(n, k));
            for (const std::vector<int>& v : shell) {
                int nz = 0;
                for (int c : v) nz += c != 0;
                CHECK(nz == k);
            }
        }
    CHECK_THROWS_AS(lattice_shell(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(lattice_shell(3, 4), std::invalid_argument);
}

TEST_CASE("fg designs") {
    SUBCASE("d3t5, lambda=2: weights and tightness") {
        const FGCase fg = make_fg_case(FGCaseTag::d3t5, 2.0);
        CHECK(fg.shell_weights[1] == doctest::Approx(9.0 / 128.0).epsilon(1e-15));
        const WeightedPointSet x = fg_design(fg);
        CHECK(x.size() == 14);
        const DesignReport report = verify_euclidean_design(x, 5);
        CHECK(report.pass);
        CHECK(is_tight(layers(x), 5, report) == Tightness::tight);
    }
    SUBCASE("d3t7 nice parameters: lambda = 3/8 gives w2 = 1/10, w3 = 8/5 exactly") {
        const FGExactTable table = fg_case_table(FGCaseTag::d3t7, Rational(3, 8));
        CHECK(table.radius_sq[1] == 2);        // layer 2 is I^3_2 unscaled
        CHECK(table.radius_sq[2] == Rational(3, 4));  // layer 3 is (1/2) I^3_3
        CHECK(table.weights[1] == Rational(1, 10));
        CHECK(table.weights[2] == Rational(8, 5));
        // the second nice choice: I^3_1 u (1/2) I^3_2 u I^3_3
        const FGExactTable other = fg_case_table(FGCaseTag::d3t7, Rational(6));
        CHECK(other.radius_sq[1] == Rational(1, 2));
        CHECK(other.radius_sq[2] == 3);
        CHECK(other.weights[1] == Rational(32, 5));
        CHECK(other.weights[2] == Rational(1, 40));
    }
    SUBCASE("d4t7, lambda=sqrt(2): D4 plus its dual, w2 = 1/8") {
        const FGCase fg = make_fg_case(FGCaseTag::d4t7, std::sqrt(2.0));
        CHECK(fg.shell_weights[1] == doctest::Approx(1.0 / 8.0).epsilon(1e-14));
        const WeightedPointSet x = fg_design(fg);
        CHECK(x.size() == 48);
        const DesignReport report = verify_euclidean_design(x, 7);
        CHECK(report.pass);
        // shells 1 and 4 share radius 1, so the layer count is 2
        const LayeredDesign ld = layers(x);
        CHECK(ld.layer_count() == 2);
        CHECK(is_tight(ld, 7, report) == Tightness::tight);
    }
    SUBCASE("d3t7 radii stay pairwise distinct for admissible lambda") {
        std::mt19937 rng(5);
        std::uniform_real_distribution<double> dist(0.05, 4.0);
        for (int trial = 0; trial < 200; ++trial) {
            double lambda = dist(rng);
            if (lambda == 1.0) continue;
            const FGCase fg = make_fg_case(FGCaseTag::d3t7, lambda);
            CHECK(fg.radii[0] != fg.radii[1]);
            CHECK(fg.radii[0] != fg.radii[2]);
            CHECK(fg.radii[1] != fg.radii[2]);
        }
    }
    SUBCASE("lambda validation") {
        for (FGCaseTag tag : {FGCaseTag::d3t5, FGCaseTag::d3t7, FGCaseTag::d4t7}) {
            CHECK_THROWS_AS(make_fg_case(tag, 1.0), std::invalid_argument);
            CHECK_THROWS_AS(make_fg_case(tag, 0.0), std::invalid_argument);
            CHECK_THROWS_AS(make_fg_case(tag, -2.0), std::invalid_argument);
            CHECK_THROWS_AS(fg_case_table(tag, Rational(1)), std::invalid_argument);
        }
    }
}

TEST_CASE("every constructor output certifies tight at its stated strength") {
    struct Item {
        WeightedPointSet x;
        int t;
    };
    std::vector<Item> items;
    items.push_back({tight_polygon_design(5, {1.0}), 5});
    items.push_back({tight_polygon_design(4, {1.0, 2.0}), 4});
    items.push_back({tight_polygon_design(9, {0.8, 1.3, 2.1}), 9});
    items.push_back({fg_design(make_fg_case(FGCaseTag::d3t5, 0.5)), 5});
    items.push_back({fg_design(make_fg_case(FGCaseTag::d3t7, 5.0)), 7});
    items.push_back({fg_design(make_fg_case(FGCaseTag::d4t7, 2.0)), 7});
    for (const Item& item : items) {
        const DesignReport report = verify_euclidean_design(item.x, item.t);
        REQUIRE(report.pass);
        CHECK(is_tight(layers(item.x), item.t, report) == Tightness::tight);
    }
}
