#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vietlab/cover.hpp"
#include "vietlab/metric_space.hpp"
#include "vietlab/transport.hpp"

namespace vietlab {

/// Seeded random source with pinned uniform/normal constructions, so the same
/// seed gives the same stream on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform();                       // [0,1)
    double uniform(double lo, double hi);   // [lo,hi)
    double normal();                        // Box-Muller
    double truncated_normal(double sigma, double cut = 3.0);
    int uniform_int(int lo, int hi);        // inclusive bounds
    std::uint64_t raw() { return gen_(); }

    /// Uniform point of the probability simplex over k coordinates.
    std::vector<double> simplex_point(int k);

private:
    std::mt19937_64 gen_;
};

/// n points at equally spaced angles on the unit circle, radius perturbed by
/// Gaussian noise truncated at 3 sigma. noise = 0 with n = 6 gives the
/// regular hexagon.
PointCloud circle_cloud(int n, double noise, std::uint64_t seed);

/// Grid sample of a torus of revolution in R^3 (major radius 2, minor 1).
PointCloud torus_grid_cloud(int major_steps, int minor_steps);

/// Uniform points in [0, scale]^dim.
PointCloud random_point_cloud(int n, int dim, double scale, Rng& rng);

/// Random explicit covering family: a few random subsets patched so that
/// every point is covered.
std::vector<Subset> random_covering_family(int point_count, Rng& rng);

/// Random measure supported inside the pool (at most max_support atoms).
DiscreteMeasure random_measure(const Subset& pool, int max_support, Rng& rng);

}  // namespace vietlab
