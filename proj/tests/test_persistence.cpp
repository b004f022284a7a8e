#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "support/oracles.hpp"
#include "vietlab/persistence.hpp"
#include "vietlab/sampling.hpp"

using namespace vietlab;

namespace {

// alive-bar counts at v must equal the static Betti numbers at v, for every
// critical value (Fundamental Lemma cross-check against the elimination oracle)
void check_fundamental_lemma(const Filtration& filtration, const PersistenceDiagram& diagram,
                             int max_dim) {
    for (double v : critical_values(filtration)) {
        const auto betti = betti_numbers(complex_at(filtration, v), max_dim);
        for (int dim = 0; dim <= max_dim; ++dim) {
            int alive = 0;
            for (const auto& bar : diagram.bars(dim))
                if (bar.birth <= v && v < bar.death) ++alive;
            CAPTURE(v);
            CAPTURE(dim);
            CHECK(alive == betti[static_cast<std::size_t>(dim)]);
        }
    }
}

}  // namespace

TEST_CASE("vr filtration of two points") {
    const auto space = FiniteMetricSpace::from_matrix({{0.0, 1.0}, {1.0, 0.0}});
    const auto filtration = build_vr_filtration(space, 1, 2.0);
    REQUIRE(filtration.entries().size() == 3);
    CHECK(filtration.entries()[0].value == 0.0);
    CHECK(filtration.entries()[1].value == 0.0);
    CHECK(filtration.entries()[2].value == 1.0);
    CHECK(filtration.entries()[2].simplex == Subset::of({0, 1}));
}

TEST_CASE("vr filtration of the hexagon lists the expected critical values") {
    const auto hexagon = oracles::regular_hexagon().to_metric_space();
    const auto filtration = build_vr_filtration(hexagon, 2, 2.5);
    std::map<int, std::multiset<double>> values_by_dim;
    for (const auto& entry : filtration.entries())
        values_by_dim[entry.simplex.size() - 1].insert(entry.value);
    CHECK(values_by_dim[0].size() == 6);
    REQUIRE(values_by_dim[1].size() == 15);
    CHECK(std::count_if(values_by_dim[1].begin(), values_by_dim[1].end(),
                        [](double v) { return std::abs(v - 1.0) < 1e-9; }) == 6);
    CHECK(std::count_if(values_by_dim[1].begin(), values_by_dim[1].end(),
                        [](double v) { return std::abs(v - oracles::kSqrt3) < 1e-9; }) == 6);
    CHECK(std::count_if(values_by_dim[1].begin(), values_by_dim[1].end(),
                        [](double v) { return std::abs(v - 2.0) < 1e-9; }) == 3);
    REQUIRE(values_by_dim[2].size() == 20);
    CHECK(std::count_if(values_by_dim[2].begin(), values_by_dim[2].end(),
                        [](double v) { return std::abs(v - oracles::kSqrt3) < 1e-9; }) == 8);
    CHECK(std::count_if(values_by_dim[2].begin(), values_by_dim[2].end(),
                        [](double v) { return std::abs(v - 2.0) < 1e-9; }) == 12);
}

TEST_CASE("filtration below the minimum distance has vertices only") {
    const auto hexagon = oracles::regular_hexagon().to_metric_space();
    const auto filtration = build_vr_filtration(hexagon, 2, 0.5);
    CHECK(filtration.entries().size() == 6);
}

TEST_CASE("order violations are rejected") {
    // edge before its vertices
    Filtration bad(2, 1, 2.0, "manual",
                   {{Subset::of({0, 1}), 0.0}, {Subset::of({0}), 1.0}, {Subset::of({1}), 1.0}});
    CHECK_THROWS_WITH(persistence(bad), "not a filtration");
}

TEST_CASE("hexagon persistence ground truth") {
    const auto hexagon = oracles::regular_hexagon().to_metric_space();
    const auto filtration = build_vr_filtration(hexagon, 3, 2.5);
    const auto diagram = persistence(filtration);

    REQUIRE(diagram.bars(0).size() == 6);
    int essential = 0;
    for (const auto& bar : diagram.bars(0)) {
        CHECK(bar.birth == 0.0);
        if (bar.essential())
            ++essential;
        else
            CHECK(bar.death == doctest::Approx(1.0).epsilon(1e-9));
    }
    CHECK(essential == 1);

    REQUIRE(diagram.bars(1).size() == 1);
    CHECK(diagram.bars(1)[0].birth == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(diagram.bars(1)[0].death == doctest::Approx(oracles::kSqrt3).epsilon(1e-9));

    REQUIRE(diagram.bars(2).size() == 1);
    CHECK(diagram.bars(2)[0].birth == doctest::Approx(oracles::kSqrt3).epsilon(1e-9));
    CHECK(diagram.bars(2)[0].death == doctest::Approx(2.0).epsilon(1e-9));

    check_fundamental_lemma(filtration, diagram, 2);
}

TEST_CASE("degenerate diagrams") {
    const auto one = FiniteMetricSpace::from_matrix({{0.0}});
    const auto single = persistence(build_vr_filtration(one, 2, 1.0));
    REQUIRE(single.bars(0).size() == 1);
    CHECK(single.bars(0)[0].essential());
    CHECK(single.bars(1).empty());

    const auto two = FiniteMetricSpace::from_matrix({{0.0, 1.0}, {1.0, 0.0}});
    const auto pair = persistence(build_vr_filtration(two, 2, 2.0));
    REQUIRE(pair.bars(0).size() == 2);
    CHECK((pair.bars(0)[0].essential() || pair.bars(0)[1].essential()));
    const auto& finite = pair.bars(0)[0].essential() ? pair.bars(0)[1] : pair.bars(0)[0];
    CHECK(finite.birth == 0.0);
    CHECK(finite.death == doctest::Approx(1.0));
}

TEST_CASE("betti number examples") {
    const auto hexagon = oracles::regular_hexagon().to_metric_space();
    CHECK(betti_numbers(vietoris_complex(hexagon, Cover(DiameterCover{1.2}), 2), 1) ==
          std::vector<int>{1, 1});
    const auto full = FiniteMetricSpace::from_matrix(
        {{0.0, 1.0, 1.0}, {1.0, 0.0, 1.0}, {1.0, 1.0, 0.0}});
    CHECK(betti_numbers(vietoris_complex(full, Cover(DiameterCover{1.01}), 2), 2) ==
          std::vector<int>{1, 0, 0});
    CHECK(betti_numbers(vietoris_complex(hexagon, Cover(DiameterCover{1.8}), 2), 2) ==
          std::vector<int>{1, 0, 1});
}

TEST_CASE("euler characteristic equals the alternating betti sum") {
    Rng rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const auto cloud = random_point_cloud(rng.uniform_int(3, 8), 2, 1.0, rng);
        const auto space = cloud.to_metric_space();
        const auto complex = vietoris_complex(space, Cover(DiameterCover{rng.uniform(0.3, 1.4)}), 3);
        const auto betti = betti_numbers(complex, 3);
        int alternating = 0, sign = 1;
        for (int b : betti) {
            alternating += sign * b;
            sign = -sign;
        }
        CHECK(alternating == euler_characteristic(complex));
    }
}

TEST_CASE("fundamental lemma on random spaces") {
    Rng rng(52);
    for (int trial = 0; trial < 12; ++trial) {
        const auto cloud = random_point_cloud(rng.uniform_int(3, 8), 2, 1.0, rng);
        const auto space = cloud.to_metric_space();
        const auto filtration = build_vr_filtration(space, 3, rng.uniform(0.6, 1.6));
        check_fundamental_lemma(filtration, persistence(filtration), 2);
    }
}

TEST_CASE("bottleneck distance examples") {
    PersistenceDiagram a, b;
    a.dims = {{}, {{0.0, 2.0}}};
    b.dims = {{}, {}};
    CHECK(bottleneck_distance(a, a, 1) == 0.0);
    CHECK(bottleneck_distance(a, b, 1) == doctest::Approx(1.0));  // diagonal cost (2-0)/2

    PersistenceDiagram c, d;
    c.dims = {{}, {{1.0, oracles::kSqrt3}}};
    d.dims = {{}, {{1.1, oracles::kSqrt3}}};
    CHECK(bottleneck_distance(c, d, 1) == doctest::Approx(0.1));

    // essential bars match essentials only; count mismatch is infinite
    PersistenceDiagram e, f;
    e.dims = {{{0.0, std::numeric_limits<double>::infinity()}}};
    f.dims = {{}};
    CHECK(bottleneck_distance(e, f, 0) == std::numeric_limits<double>::infinity());
    f.dims = {{{0.25, std::numeric_limits<double>::infinity()}}};
    CHECK(bottleneck_distance(e, f, 0) == doctest::Approx(0.25));
}

namespace {
PersistenceDiagram random_diagram(Rng& rng) {
    PersistenceDiagram diagram;
    diagram.dims.resize(2);
    const int bars = rng.uniform_int(0, 8);
    for (int k = 0; k < bars; ++k) {
        const double birth = rng.uniform(0.0, 2.0);
        diagram.dims[1].push_back({birth, birth + rng.uniform(0.01, 2.0)});
    }
    return diagram;
}
}  // namespace

TEST_CASE("bottleneck distance is a pseudometric") {
    Rng rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_diagram(rng);
        const auto b = random_diagram(rng);
        const auto c = random_diagram(rng);
        const double ab = bottleneck_distance(a, b, 1);
        const double ba = bottleneck_distance(b, a, 1);
        CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
        CHECK(bottleneck_distance(a, a, 1) == 0.0);
        const double ac = bottleneck_distance(a, c, 1);
        const double cb = bottleneck_distance(c, b, 1);
        CHECK(ab <= ac + cb + 1e-9);
    }
}

TEST_CASE("bottleneck stability under small perturbations") {
    // each point moves by at most delta in euclidean norm, so pairwise
    // distances (and simplex diameters) move by at most 2*delta
    const double delta = 0.01;
    const auto base_cloud = circle_cloud(30, 0.02, 5);
    const auto base = persistence(build_vr_filtration(base_cloud.to_metric_space(), 2, 2.0));
    Rng rng(54);
    for (int trial = 0; trial < 5; ++trial) {
        PointCloud moved(2);
        for (int i = 0; i < base_cloud.size(); ++i) {
            const double angle = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
            const double step = rng.uniform(0.0, delta);
            const double p[2] = {base_cloud.point(i)[0] + step * std::cos(angle),
                                 base_cloud.point(i)[1] + step * std::sin(angle)};
            moved.add(p);
        }
        const auto perturbed = persistence(build_vr_filtration(moved.to_metric_space(), 2, 2.0));
        CHECK(bottleneck_distance(base, perturbed, 1) <= 2.0 * delta + 1e-9);
    }
}
