#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "vietlab/cover.hpp"
#include "vietlab/metric_space.hpp"
#include "vietlab/transport.hpp"

namespace vietlab {

/// The space of finitely supported probability measures whose support lies in
/// a cover element, metrized by q-Wasserstein optimal transport (q = 1 by
/// default).
struct ThickeningSpec {
    std::shared_ptr<const FiniteMetricSpace> space;
    Cover cover;
    double q = 1.0;
};

/// Membership predicate: the support is contained in a cover element.
bool member(const ThickeningSpec& spec, const DiscreteMeasure& mu);

/// The support simplex with the weights as barycentric coordinates; inverse
/// direction of the natural bijection between the complex and the thickening.
struct SupportPoint {
    Subset simplex;
    std::vector<double> weights;
};

SupportPoint support_point(const DiscreteMeasure& mu);

struct SampleTooLarge : std::runtime_error {
    SampleTooLarge(std::size_t estimate, std::size_t cap);
    std::size_t estimate;
    std::size_t cap;
};

/// Finite weight-grid discretization: every measure with support of size
/// <= max_support contained in a cover element and weights in
/// {j/grid_m : j = 1..grid_m} summing to 1. Contains all Dirac measures, so
/// the base space embeds isometrically. The pairwise Wasserstein matrix is
/// computed eagerly (parallel over rows, deterministic output).
struct SampledThickening {
    std::vector<DiscreteMeasure> measures;
    std::shared_ptr<const FiniteMetricSpace> metric;
    int grid_m = 1;
    int max_support = 1;
};

constexpr std::size_t kDefaultSampleCap = 4000;

SampledThickening sample_thickening(const ThickeningSpec& spec, int grid_m, int max_support,
                                    std::size_t size_cap = kDefaultSampleCap);

/// The measures (1-t)*zeta + t*target at t = i/steps, i = 0..steps. Requires
/// supp(target) within supp(zeta), so the support never grows and every step
/// stays in the thickening.
std::vector<DiscreteMeasure> straight_line_path(const ThickeningSpec& spec,
                                                const DiscreteMeasure& zeta,
                                                const DiscreteMeasure& target, int steps);

}  // namespace vietlab
