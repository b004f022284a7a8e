#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support/oracles.hpp"
#include "vietlab/complex.hpp"
#include "vietlab/persistence.hpp"
#include "vietlab/sampling.hpp"

using namespace vietlab;

namespace {

std::set<std::vector<int>> simplex_set(const SimplicialComplex& complex) {
    std::set<std::vector<int>> out;
    for (int dim = 0; dim <= complex.max_dim(); ++dim)
        for (const auto& simplex : complex.simplices(dim)) out.insert(simplex.indices());
    return out;
}

}  // namespace

TEST_CASE("hexagon diameter cover at 1.01 is the 6-cycle") {
    const auto hexagon = oracles::regular_hexagon().to_metric_space();
    const auto complex = vietoris_complex(hexagon, Cover(DiameterCover{1.01}), 2);
    CHECK(complex.counts() == std::vector<int>{6, 6, 0});
    for (int i = 0; i < 6; ++i)
        CHECK(complex.contains(Subset::of({std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6)})));
}

TEST_CASE("three mutually unit-distant points give the full 2-simplex") {
    const auto space = FiniteMetricSpace::from_matrix(
        {{0.0, 1.0, 1.0}, {1.0, 0.0, 1.0}, {1.0, 1.0, 0.0}});
    const auto complex = vietoris_complex(space, Cover(DiameterCover{1.01}), 2);
    CHECK(complex.counts() == std::vector<int>{3, 3, 1});
}

TEST_CASE("ambient ball cover separates from the diameter cover on the triangle") {
    const auto triangle = oracles::equilateral_triangle();
    const auto space = triangle.to_metric_space();
    const auto ambient = vietoris_complex(space, Cover(AmbientBallCover{triangle, 0.6}), 2);
    CHECK(ambient.counts() == std::vector<int>{3, 3, 1});
    const auto vr = vietoris_complex(space, Cover(DiameterCover{0.6}), 2);
    CHECK(vr.counts() == std::vector<int>{3, 0, 0});
}

TEST_CASE("nerve examples") {
    const auto line = oracles::unit_line(4);
    const auto whole = nerve_complex(line, Cover(ExplicitCover{{Subset::full(4)}}), 2);
    CHECK(whole.complex.counts() == std::vector<int>{1, 0, 0});

    const auto disjoint = nerve_complex(
        line, Cover(ExplicitCover{{Subset::of({0, 1}), Subset::of({2, 3})}}), 2);
    CHECK(disjoint.complex.counts() == std::vector<int>{2, 0, 0});

    // six adjacent-pair sets on the hexagon: pairwise intersections are the
    // shared vertices, so the nerve is a 6-cycle
    const auto hexagon = oracles::regular_hexagon().to_metric_space();
    std::vector<Subset> pairs;
    for (int i = 0; i < 6; ++i) pairs.push_back(Subset::of({i, (i + 1) % 6}));
    const auto cycle = nerve_complex(hexagon, Cover(ExplicitCover{std::move(pairs)}), 2);
    CHECK(cycle.complex.counts() == std::vector<int>{6, 6, 0});

    CHECK_THROWS_WITH(nerve_complex(hexagon, Cover(DiameterCover{1.0}), 2),
                      "nerve requires explicit cover");
}

TEST_CASE("euler characteristic examples") {
    const auto full = FiniteMetricSpace::from_matrix(
        {{0.0, 1.0, 1.0}, {1.0, 0.0, 1.0}, {1.0, 1.0, 0.0}});
    CHECK(euler_characteristic(vietoris_complex(full, Cover(DiameterCover{1.01}), 2)) == 1);

    const auto hexagon = oracles::regular_hexagon().to_metric_space();
    CHECK(euler_characteristic(vietoris_complex(hexagon, Cover(DiameterCover{1.01}), 2)) == 0);

    // octahedron boundary at r = 1.8: counts frozen from subset enumeration
    const auto octa = vietoris_complex(hexagon, Cover(DiameterCover{1.8}), 2);
    int edges = 0, triangles = 0;
    for (const auto& s : oracles::all_subsets(6, 3)) {
        if (s.size() == 2 && oracles::subset_diameter(hexagon, s) < 1.8) ++edges;
        if (s.size() == 3 && oracles::subset_diameter(hexagon, s) < 1.8) ++triangles;
    }
    CHECK(edges == 12);
    CHECK(triangles == 8);
    CHECK(octa.counts() == std::vector<int>{6, edges, triangles});
    CHECK(euler_characteristic(octa) == 2);
}

TEST_CASE("construction matches brute-force enumeration for all cover families") {
    Rng rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        const auto cloud = random_point_cloud(rng.uniform_int(3, 8), 2, 1.0, rng);
        const auto space = cloud.to_metric_space();
        const double r = rng.uniform(0.2, 1.5);
        CHECK(simplex_set(vietoris_complex(space, Cover(DiameterCover{r}), 2)) ==
              oracles::vr_simplices(space, r, 2));
        CHECK(simplex_set(vietoris_complex(space, Cover(BallCover{r}), 2)) ==
              oracles::cech_simplices(space, r, 2));
    }
}

TEST_CASE("downward closure holds exhaustively on small instances") {
    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.uniform_int(4, 10);
        const auto cloud = random_point_cloud(n, 2, 1.0, rng);
        const auto space = cloud.to_metric_space();
        Cover cover = (trial % 3 == 0) ? Cover(DiameterCover{rng.uniform(0.3, 1.2)})
                      : (trial % 3 == 1)
                          ? Cover(BallCover{rng.uniform(0.3, 1.2)})
                          : Cover(ExplicitCover{random_covering_family(n, rng)});
        const auto complex = vietoris_complex(space, cover, 3);
        for (int dim = 1; dim <= complex.max_dim(); ++dim)
            for (const auto& simplex : complex.simplices(dim))
                for (int drop = 0; drop < simplex.size(); ++drop)
                    CHECK(complex.contains(simplex.without(drop)));
    }
}

TEST_CASE("simplex sets grow monotonically with the scale") {
    Rng rng(43);
    for (int trial = 0; trial < 15; ++trial) {
        const auto cloud = random_point_cloud(rng.uniform_int(3, 7), 2, 1.0, rng);
        const auto space = cloud.to_metric_space();
        const double r1 = rng.uniform(0.2, 1.0);
        const double r2 = r1 + rng.uniform(0.0, 0.8);
        auto check_inclusion = [&](const Cover& small, const Cover& large) {
            const auto a = simplex_set(vietoris_complex(space, small, 2));
            const auto b = simplex_set(vietoris_complex(space, large, 2));
            for (const auto& s : a) CHECK(b.count(s) == 1);
        };
        check_inclusion(Cover(DiameterCover{r1}), Cover(DiameterCover{r2}));
        check_inclusion(Cover(BallCover{r1}), Cover(BallCover{r2}));
        check_inclusion(Cover(AmbientBallCover{cloud, r1}), Cover(AmbientBallCover{cloud, r2}));
    }
}

TEST_CASE("ambient cover with the space as centers equals the intrinsic complex per simplex") {
    Rng rng(44);
    for (int trial = 0; trial < 10; ++trial) {
        const auto cloud = random_point_cloud(rng.uniform_int(3, 6), 2, 1.0, rng);
        const auto space = cloud.to_metric_space();
        const double r = rng.uniform(0.3, 1.2);
        // discrete-center witness search reproduces the ball cover exactly
        for (const auto& s : oracles::all_subsets(space.size(), 3))
            CHECK(oracles::discrete_center_witness(cloud, s, r) ==
                  contains_set(space, Cover(BallCover{r}), Subset::of(std::vector<int>(s))));
    }
}

TEST_CASE("vietoris complex and nerve of random explicit covers have equal betti numbers") {
    Rng rng(45);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.uniform_int(3, 7);
        const auto cloud = random_point_cloud(n, 2, 1.0, rng);
        const auto space = cloud.to_metric_space();
        const Cover cover(ExplicitCover{random_covering_family(n, rng)});
        const auto vietoris = vietoris_complex(space, cover, 3);
        const auto nerve = nerve_complex(space, cover, 3);
        CHECK(betti_numbers(vietoris, 2) == betti_numbers(nerve.complex, 2));
    }
}
