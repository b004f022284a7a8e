#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "vietlab/cover.hpp"
#include "vietlab/miniball.hpp"
#include "vietlab/sampling.hpp"

using namespace vietlab;

TEST_CASE("minimal enclosing ball basics") {
    const auto triangle = oracles::equilateral_triangle();
    CHECK(minimal_enclosing_ball(triangle, Subset::of({0})).radius == 0.0);
    CHECK(minimal_enclosing_ball(triangle, Subset::of({0, 1})).radius == doctest::Approx(0.5));
    // circumradius of the unit equilateral triangle
    CHECK(minimal_enclosing_ball(triangle, Subset::full(3)).radius ==
          doctest::Approx(1.0 / std::sqrt(3.0)));

    const auto square = PointCloud::from_rows({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(minimal_enclosing_ball(square, Subset::full(4)).radius ==
          doctest::Approx(std::sqrt(0.5)));

    // collinear points: the middle one is interior
    const auto collinear = PointCloud::from_rows({{0, 0}, {1, 0}, {2, 0}});
    const Ball ball = minimal_enclosing_ball(collinear, Subset::full(3));
    CHECK(ball.radius == doctest::Approx(1.0));
    CHECK(ball.center[0] == doctest::Approx(1.0));

    // interior points never grow the ball
    const auto with_interior = PointCloud::from_rows({{0, 0}, {2, 0}, {1, 0.2}});
    CHECK(minimal_enclosing_ball(with_interior, Subset::full(3)).radius == doctest::Approx(1.0));

    // duplicates collapse
    const auto duplicated = PointCloud::from_rows({{0, 0}, {0, 0}, {1, 0}});
    CHECK(minimal_enclosing_ball(duplicated, Subset::full(3)).radius == doctest::Approx(0.5));

    CHECK_THROWS(minimal_enclosing_ball(triangle, Subset{}));
}

TEST_CASE("miniball against a randomized farthest-point check") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const auto cloud = random_point_cloud(rng.uniform_int(2, 12), rng.uniform_int(2, 3), 1.0, rng);
        const Ball ball = minimal_enclosing_ball(cloud, Subset::full(cloud.size()));
        double farthest = 0.0;
        for (int p = 0; p < cloud.size(); ++p) {
            double sq = 0.0;
            for (int d = 0; d < cloud.dim(); ++d) {
                const double diff = cloud.point(p)[static_cast<std::size_t>(d)] -
                                    ball.center[static_cast<std::size_t>(d)];
                sq += diff * diff;
            }
            farthest = std::max(farthest, std::sqrt(sq));
        }
        // enclosing, and some point realizes the radius (no slack)
        CHECK(farthest <= ball.radius + 1e-9);
        CHECK(farthest >= ball.radius - 1e-9);
    }
}

TEST_CASE("contains_set examples") {
    const auto hexagon = oracles::regular_hexagon().to_metric_space();
    CHECK(contains_set(hexagon, Cover(DiameterCover{1.01}), Subset::of({0, 1})));
    CHECK_FALSE(contains_set(hexagon, Cover(DiameterCover{1.01}), Subset::of({0, 2})));

    const auto triangle = oracles::equilateral_triangle();
    const auto tri_space = triangle.to_metric_space();
    // witness enumeration over the three vertices: distances {0,1,1} all < 1.01
    CHECK(contains_set(tri_space, Cover(BallCover{1.01}), Subset::full(3)));
    CHECK_FALSE(contains_set(tri_space, Cover(BallCover{0.99}), Subset::full(3)));

    // ambient witness: circumradius 1/sqrt(3) ~ 0.5774
    CHECK(contains_set(tri_space, Cover(AmbientBallCover{triangle, 0.6}), Subset::full(3)));
    CHECK_FALSE(contains_set(tri_space, Cover(AmbientBallCover{triangle, 0.55}), Subset::full(3)));

    CHECK_THROWS(contains_set(tri_space, Cover(DiameterCover{1.0}), Subset{}));
    CHECK_THROWS(contains_set(tri_space, Cover(DiameterCover{1.0}), Subset::of({7})));
}

TEST_CASE("explicit cover containment and validation") {
    const auto line = oracles::unit_line(4);
    const Cover cover(ExplicitCover{{Subset::of({0, 1}), Subset::of({1, 2, 3})}});
    CHECK(contains_set(line, cover, Subset::of({0, 1})));
    CHECK(contains_set(line, cover, Subset::of({2, 3})));
    CHECK_FALSE(contains_set(line, cover, Subset::of({0, 2})));

    const auto report = validate_cover(line, cover);
    CHECK(report.covers);
    CHECK(report.element_count == 2);
    CHECK(report.uniform_bound > 2.0);

    const auto missing = validate_cover(line, Cover(ExplicitCover{{Subset::of({0, 1})}}));
    CHECK_FALSE(missing.covers);
    CHECK(missing.uncovered == std::vector<int>{2, 3});

    CHECK_THROWS(Cover(ExplicitCover{{Subset{}}}));
}

TEST_CASE("whole-space cover is valid with bound just above the diameter") {
    const auto hexagon = oracles::regular_hexagon().to_metric_space();
    const auto report = validate_cover(hexagon, Cover(ExplicitCover{{Subset::full(6)}}));
    CHECK(report.covers);
    CHECK(report.uniform_bound > diameter(hexagon, Subset::full(6)));
    CHECK(report.uniform_bound == doctest::Approx(2.0));
}

TEST_CASE("parametric covers always cover") {
    const auto hexagon = oracles::regular_hexagon().to_metric_space();
    const auto ball_report = validate_cover(hexagon, Cover(BallCover{0.3}));
    CHECK(ball_report.covers);
    CHECK(ball_report.uniform_bound == doctest::Approx(0.6));
    CHECK(validate_cover(hexagon, Cover(DiameterCover{0.1})).covers);
    CHECK_THROWS(Cover(DiameterCover{0.0}));
    CHECK_THROWS(Cover(BallCover{-1.0}));
}

TEST_CASE("containment is monotone in the scale for all parametric families") {
    Rng rng(32);
    for (int trial = 0; trial < 30; ++trial) {
        const auto cloud = random_point_cloud(rng.uniform_int(3, 8), 2, 1.0, rng);
        const auto space = cloud.to_metric_space();
        const double r1 = rng.uniform(0.1, 1.2);
        const double r2 = r1 + rng.uniform(0.0, 0.8);
        for (const auto& s : oracles::all_subsets(space.size(), 4)) {
            const Subset subset = Subset::of(std::vector<int>(s));
            if (contains_set(space, Cover(DiameterCover{r1}), subset))
                CHECK(contains_set(space, Cover(DiameterCover{r2}), subset));
            if (contains_set(space, Cover(BallCover{r1}), subset))
                CHECK(contains_set(space, Cover(BallCover{r2}), subset));
            if (contains_set(space, Cover(AmbientBallCover{cloud, r1}), subset))
                CHECK(contains_set(space, Cover(AmbientBallCover{cloud, r2}), subset));
        }
    }
}

TEST_CASE("diameter and ball covers specialize to the definitional predicates") {
    Rng rng(33);
    for (int trial = 0; trial < 25; ++trial) {
        const auto cloud = random_point_cloud(rng.uniform_int(3, 7), 2, 1.0, rng);
        const auto space = cloud.to_metric_space();
        const double r = rng.uniform(0.2, 1.4);
        for (const auto& s : oracles::all_subsets(space.size(), 4)) {
            const Subset subset = Subset::of(std::vector<int>(s));
            CHECK(contains_set(space, Cover(DiameterCover{r}), subset) ==
                  (oracles::subset_diameter(space, s) < r));
            bool witnessed = false;
            for (int x = 0; x < space.size() && !witnessed; ++x) {
                bool all_close = true;
                for (int p : s) all_close = all_close && space.dist(x, p) < r;
                witnessed = all_close;
            }
            CHECK(contains_set(space, Cover(BallCover{r}), subset) == witnessed);
        }
    }
}

TEST_CASE("ambient cover with witnesses restricted to the points reproduces the ball cover") {
    Rng rng(34);
    for (int trial = 0; trial < 25; ++trial) {
        const auto cloud = random_point_cloud(rng.uniform_int(3, 7), 2, 1.0, rng);
        const auto space = cloud.to_metric_space();
        const double r = rng.uniform(0.2, 1.4);
        for (const auto& s : oracles::all_subsets(space.size(), 4)) {
            CHECK(contains_set(space, Cover(BallCover{r}), Subset::of(std::vector<int>(s))) ==
                  oracles::discrete_center_witness(cloud, s, r));
        }
    }
}
