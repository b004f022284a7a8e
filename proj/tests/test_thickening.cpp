#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "support/oracles.hpp"
#include "vietlab/sampling.hpp"
#include "vietlab/thickening.hpp"

using namespace vietlab;

namespace {

ThickeningSpec hexagon_spec(double r) {
    auto space = std::make_shared<FiniteMetricSpace>(oracles::regular_hexagon().to_metric_space());
    return ThickeningSpec{space, Cover(DiameterCover{r}), 1.0};
}

std::set<std::vector<std::pair<int, double>>> measure_keys(const std::vector<DiscreteMeasure>& ms) {
    std::set<std::vector<std::pair<int, double>>> out;
    for (const auto& m : ms) {
        std::vector<std::pair<int, double>> key;
        for (const auto& atom : m.atoms()) key.emplace_back(atom.point, atom.weight);
        out.insert(std::move(key));
    }
    return out;
}

}  // namespace

TEST_CASE("membership follows the cover predicate") {
    const auto spec = hexagon_spec(1.01);
    CHECK(member(spec, dirac(2)));
    CHECK(member(spec, DiscreteMeasure::from_atoms({{0, 0.5}, {1, 0.5}})));
    // support {0, 2} has diameter sqrt(3) > 1.01
    CHECK_FALSE(member(spec, DiscreteMeasure::from_atoms({{0, 0.5}, {2, 0.5}})));
}

TEST_CASE("support point is the inverse of the natural bijection") {
    const auto d = support_point(dirac(4));
    CHECK(d.simplex == Subset::of({4}));
    CHECK(d.weights == std::vector<double>{1.0});

    const auto edge = support_point(DiscreteMeasure::from_atoms({{0, 1.0 / 3.0}, {1, 2.0 / 3.0}}));
    CHECK(edge.simplex == Subset::of({0, 1}));
    CHECK(edge.weights[0] == doctest::Approx(1.0 / 3.0));
    CHECK(edge.weights[1] == doctest::Approx(2.0 / 3.0));

    // zero-weight atoms vanish before the support is read
    const auto pruned = support_point(DiscreteMeasure::from_atoms({{0, 1.0}, {1, 0.0}}));
    CHECK(pruned.simplex == Subset::of({0}));
}

TEST_CASE("grid 1 sampling gives exactly the dirac copies") {
    const auto spec = hexagon_spec(1.01);
    const auto sample = sample_thickening(spec, 1, 3);
    REQUIRE(sample.measures.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(sample.measures[static_cast<std::size_t>(i)] == dirac(i));
}

TEST_CASE("two nearby points at grid 2 give three measures") {
    auto space = std::make_shared<FiniteMetricSpace>(
        FiniteMetricSpace::from_matrix({{0.0, 1.0}, {1.0, 0.0}}));
    const ThickeningSpec spec{space, Cover(DiameterCover{1.5}), 1.0};
    const auto sample = sample_thickening(spec, 2, 2);
    REQUIRE(sample.measures.size() == 3);
    const auto keys = measure_keys(sample.measures);
    CHECK(keys.count({{0, 1.0}}) == 1);
    CHECK(keys.count({{1, 1.0}}) == 1);
    CHECK(keys.count({{0, 0.5}, {1, 0.5}}) == 1);
}

TEST_CASE("hexagon grid 2 sample has the six diracs plus six edge midpoints") {
    const auto spec = hexagon_spec(1.01);
    const auto sample = sample_thickening(spec, 2, 2);
    CHECK(sample.measures.size() == 12);
    int midpoints = 0;
    for (const auto& m : sample.measures)
        if (m.size() == 2) {
            ++midpoints;
            CHECK(diameter(*spec.space, m.support()) == doctest::Approx(1.0));
        }
    CHECK(midpoints == 6);
}

TEST_CASE("size cap fails loudly with the estimate") {
    const auto spec = hexagon_spec(1.01);
    try {
        sample_thickening(spec, 4, 2, 5);
        FAIL("expected SampleTooLarge");
    } catch (const SampleTooLarge& e) {
        CHECK(e.estimate == 24);  // 6 diracs + 6 edges * 3 interior weights
        CHECK(e.cap == 5);
        CHECK(std::string(e.what()).find("sample too large") != std::string::npos);
    }
}

TEST_CASE("straight line path examples") {
    const auto spec = hexagon_spec(1.01);
    const auto zeta = DiscreteMeasure::from_atoms({{0, 0.5}, {1, 0.5}});

    const auto constant = straight_line_path(spec, zeta, zeta, 4);
    for (const auto& step : constant) CHECK(step == zeta);

    const auto two = straight_line_path(spec, zeta, dirac(0), 1);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == zeta);
    CHECK(two[1] == dirac(0));

    const auto mid = straight_line_path(spec, zeta, dirac(0), 2);
    REQUIRE(mid.size() == 3);
    CHECK(mid[1].weight_at(0) == doctest::Approx(0.75));
    CHECK(mid[1].weight_at(1) == doctest::Approx(0.25));

    // growing the support is rejected
    CHECK_THROWS_WITH(straight_line_path(spec, dirac(0), zeta, 2), "path may exit thickening");
}

TEST_CASE("sampled measures satisfy the natural bijection consistency") {
    const auto spec = hexagon_spec(1.2);
    const auto sample = sample_thickening(spec, 3, 2);
    for (const auto& m : sample.measures) {
        CHECK(member(spec, m));
        CHECK(contains_set(*spec.space, spec.cover, support_point(m).simplex));
    }
    // and a non-member fails both sides
    const auto far = DiscreteMeasure::from_atoms({{0, 0.5}, {3, 0.5}});
    CHECK_FALSE(member(spec, far));
    CHECK_FALSE(contains_set(*spec.space, spec.cover, support_point(far).simplex));
}

TEST_CASE("dirac rows of the sampled metric reproduce the base distances exactly") {
    const auto spec = hexagon_spec(1.2);
    const auto sample = sample_thickening(spec, 2, 2);
    // diracs come first in enumeration order only per-support; find them
    std::vector<int> dirac_row(6, -1);
    for (std::size_t k = 0; k < sample.measures.size(); ++k)
        if (sample.measures[k].size() == 1)
            dirac_row[static_cast<std::size_t>(sample.measures[k].atoms()[0].point)] =
                static_cast<int>(k);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            REQUIRE(dirac_row[static_cast<std::size_t>(i)] >= 0);
            CHECK(sample.metric->dist(dirac_row[static_cast<std::size_t>(i)],
                                      dirac_row[static_cast<std::size_t>(j)]) ==
                  spec.space->dist(i, j));
        }
}

TEST_CASE("straight line paths obey the lipschitz bound") {
    const auto spec = hexagon_spec(1.2);
    Rng rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        // random measure on a random adjacent pair, contracted toward a vertex
        const int v = rng.uniform_int(0, 5);
        const int w = (v + 1) % 6;
        const double t = rng.uniform(0.05, 0.95);
        const auto zeta = DiscreteMeasure::from_atoms({{std::min(v, w), t}, {std::max(v, w), 1 - t}});
        const auto target = dirac(std::min(v, w));
        const int steps = 5;
        const auto path = straight_line_path(spec, zeta, target, steps);
        const double span = wasserstein(*spec.space, zeta, target, 1.0).distance;
        for (int a = 0; a <= steps; ++a)
            for (int b = a + 1; b <= steps; ++b) {
                const double d = wasserstein(*spec.space, path[static_cast<std::size_t>(a)],
                                             path[static_cast<std::size_t>(b)], 1.0)
                                     .distance;
                CHECK(d <= (static_cast<double>(b - a) / steps) * span + 1e-9);
            }
    }
}

TEST_CASE("support-size truncations nest") {
    const auto spec = hexagon_spec(1.9);  // wider cover so triples exist
    const auto small = sample_thickening(spec, 3, 2);
    const auto large = sample_thickening(spec, 3, 3);
    CHECK(small.measures.size() < large.measures.size());
    const auto keys = measure_keys(large.measures);
    for (const auto& key : measure_keys(small.measures)) CHECK(keys.count(key) == 1);
}

TEST_CASE("sampler degrees of freedom per support match the dimension count") {
    // count the free parameters carried by an actual sampled measure: D
    // coordinates per support point plus the weights minus the unit-sum
    // constraint; the total must be k*D + (k-1)
    const auto cloud = oracles::regular_hexagon();
    auto space = std::make_shared<FiniteMetricSpace>(cloud.to_metric_space());
    const ThickeningSpec spec{space, Cover(DiameterCover{1.9}), 1.0};
    const auto sample = sample_thickening(spec, 3, 3);
    for (const auto& m : sample.measures) {
        const int k = m.size();
        int coordinate_slots = 0;
        for (const auto& atom : m.atoms())
            coordinate_slots += static_cast<int>(cloud.point(atom.point).size());
        const int weight_freedoms = static_cast<int>(m.atoms().size()) - 1;
        CHECK(coordinate_slots + weight_freedoms == k * cloud.dim() + (k - 1));
    }
}

TEST_CASE("repeated sampling is deterministic including the parallel matrix fill") {
    const auto spec = hexagon_spec(1.2);
    const auto a = sample_thickening(spec, 4, 2);
    const auto b = sample_thickening(spec, 4, 2);
    REQUIRE(a.measures.size() == b.measures.size());
    for (std::size_t k = 0; k < a.measures.size(); ++k) CHECK(a.measures[k] == b.measures[k]);
    CHECK(a.metric->flat() == b.metric->flat());
}
