#pragma once

#include <vector>

#include "vietlab/metric_space.hpp"

namespace vietlab {

struct Ball {
    std::vector<double> center;
    double radius = -1.0;  // radius < 0 means "empty ball" (contains nothing)
};

/// Exact minimal enclosing ball of the selected points (Welzl's recursive
/// pivoting with a direct circumsphere solve on the support set; 1e-12
/// tolerance on containment and on the linear solves).
Ball minimal_enclosing_ball(const PointCloud& cloud, const Subset& points);

}  // namespace vietlab
