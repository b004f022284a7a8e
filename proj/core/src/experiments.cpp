#include "vietlab/experiments.hpp"

#include <algorithm>
#include <limits>

namespace vietlab {

LatschevResult run_latschev(const LatschevConfig& config) {
    LatschevResult result;
    result.seed = config.seed;
    const PointCloud cloud = circle_cloud(config.n, config.noise, config.seed);
    const FiniteMetricSpace space = cloud.to_metric_space();
    const Filtration filtration = build_vr_filtration(space, 2, config.r_max);
    const PersistenceDiagram diagram = persistence(filtration);
    result.h1 = diagram.bars(1);

    for (const auto& bar : result.h1) {
        const double length = bar.length();
        if (length > config.dominant_min) {
            ++result.dominant_count;
            result.dominant_length = std::max(result.dominant_length, length);
        } else {
            result.max_minor_length = std::max(result.max_minor_length, length);
        }
    }
    result.sufficient_sample = config.n >= 20;
    result.pass = result.dominant_count == 1 && result.max_minor_length < config.minor_max;
    return result;
}

std::vector<LatschevResult> run_latschev_sweep(const LatschevConfig& config, int seed_count) {
    std::vector<LatschevResult> results;
    results.reserve(static_cast<std::size_t>(seed_count));
    for (int k = 0; k < seed_count; ++k) {
        LatschevConfig one = config;
        one.seed = config.seed + static_cast<std::uint64_t>(k);
        results.push_back(run_latschev(one));
    }
    return results;
}

ThickeningProbeResult run_thickening_probe(const PointCloud& cloud,
                                           const ThickeningProbeConfig& config) {
    ThickeningProbeResult result;
    auto space = std::make_shared<FiniteMetricSpace>(cloud.to_metric_space());
    const ThickeningSpec spec{space, Cover(DiameterCover{config.r}), config.q};

    const SimplicialComplex complex =
        vietoris_complex(*space, spec.cover, config.homology_max_dim + 1);
    result.vr_betti = betti_numbers(complex, config.homology_max_dim);

    result.pass = true;
    for (int grid : config.grids) {
        ProbeGridResult row;
        row.grid_m = grid;
        const SampledThickening sample =
            sample_thickening(spec, grid, config.max_support, config.size_cap);
        row.measure_count = sample.measures.size();

        const FiniteMetricSpace& metric = *sample.metric;
        double rho = 0.0;
        for (int i = 0; i < metric.size(); ++i) {
            double nearest = std::numeric_limits<double>::infinity();
            for (int j = 0; j < metric.size(); ++j)
                if (j != i) nearest = std::min(nearest, metric.dist(i, j));
            if (metric.size() > 1) rho = std::max(rho, nearest);
        }
        row.resolution = rho;
        row.window_lo = config.window_lo_factor * rho;
        row.window_hi = config.window_hi_factor * rho;

        const Filtration filtration =
            build_vr_filtration(metric, config.homology_max_dim + 1, row.window_hi * 1.1);
        const PersistenceDiagram diagram = persistence(filtration);
        for (int dim = 0; dim <= config.homology_max_dim; ++dim)
            row.window_betti.push_back(diagram.alive_through(dim, row.window_lo, row.window_hi));
        row.agrees = row.window_betti == result.vr_betti;
        result.pass = result.pass && row.agrees;
        result.grids.push_back(std::move(row));
    }
    return result;
}

}  // namespace vietlab
