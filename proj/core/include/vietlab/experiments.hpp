#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vietlab/persistence.hpp"
#include "vietlab/sampling.hpp"
#include "vietlab/thickening.hpp"

namespace vietlab {

/// Noisy-circle recovery: sample n seeded circle points, run degree-1 VR
/// persistence, and test that exactly one dominant cycle stands out.
struct LatschevConfig {
    int n = 100;
    double noise = 0.05;
    std::uint64_t seed = 7;
    double r_max = 2.0;
    double dominant_min = 0.5;  // the single long bar must exceed this
    double minor_max = 0.2;     // every other bar must stay below this
};

struct LatschevResult {
    std::uint64_t seed = 0;
    std::vector<PersistenceBar> h1;
    int dominant_count = 0;
    double dominant_length = 0.0;
    double max_minor_length = 0.0;
    bool sufficient_sample = true;  // flagged false for tiny n
    bool pass = false;
};

LatschevResult run_latschev(const LatschevConfig& config);
std::vector<LatschevResult> run_latschev_sweep(const LatschevConfig& config, int seed_count);

/// Homology comparison between a Vietoris-Rips complex and the weight-grid
/// sample of its metric thickening. The sampled space's persistence is read
/// on a window above the sampling resolution (max nearest-neighbor distance
/// rho): grid artifacts die at rho, so the window spans [1.5, 2.5] * rho by
/// default. Betti numbers counted on the window must match the complex.
struct ThickeningProbeConfig {
    double r = 1.2;
    std::vector<int> grids{2, 3, 4};
    int max_support = 2;
    int homology_max_dim = 1;
    double window_lo_factor = 1.5;
    double window_hi_factor = 2.5;
    std::size_t size_cap = kDefaultSampleCap;
    double q = 1.0;
};

struct ProbeGridResult {
    int grid_m = 0;
    std::size_t measure_count = 0;
    double resolution = 0.0;  // max nearest-neighbor Wasserstein distance
    double window_lo = 0.0;
    double window_hi = 0.0;
    std::vector<int> window_betti;
    bool agrees = false;
};

struct ThickeningProbeResult {
    std::vector<int> vr_betti;
    std::vector<ProbeGridResult> grids;
    bool pass = false;
};

ThickeningProbeResult run_thickening_probe(const PointCloud& cloud,
                                           const ThickeningProbeConfig& config);

}  // namespace vietlab
