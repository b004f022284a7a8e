#include "vietlab/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vietlab {

Subset Subset::from_sorted(std::vector<int> indices) {
    for (std::size_t k = 1; k < indices.size(); ++k) {
        if (indices[k - 1] >= indices[k])
            throw std::invalid_argument("subset indices must be strictly increasing");
    }
    if (!indices.empty() && indices.front() < 0)
        throw std::invalid_argument("subset indices must be non-negative");
    Subset s;
    s.idx_ = std::move(indices);
    return s;
}

Subset Subset::of(std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    return from_sorted(std::move(indices));
}

Subset Subset::full(int n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    Subset s;
    s.idx_ = std::move(all);
    return s;
}

bool Subset::contains(int index) const {
    return std::binary_search(idx_.begin(), idx_.end(), index);
}

bool Subset::is_subset_of(const Subset& other) const {
    return std::includes(other.idx_.begin(), other.idx_.end(), idx_.begin(), idx_.end());
}

Subset Subset::with(int index) const {
    if (contains(index)) return *this;
    Subset s;
    s.idx_.reserve(idx_.size() + 1);
    auto it = std::lower_bound(idx_.begin(), idx_.end(), index);
    s.idx_.assign(idx_.begin(), it);
    s.idx_.push_back(index);
    s.idx_.insert(s.idx_.end(), it, idx_.end());
    return s;
}

Subset Subset::without(int pos) const {
    Subset s;
    s.idx_ = idx_;
    s.idx_.erase(s.idx_.begin() + pos);
    return s;
}

Subset set_union(const Subset& a, const Subset& b) {
    Subset s;
    std::set_union(a.idx_.begin(), a.idx_.end(), b.idx_.begin(), b.idx_.end(),
                   std::back_inserter(s.idx_));
    return s;
}

Subset set_intersection(const Subset& a, const Subset& b) {
    Subset s;
    std::set_intersection(a.idx_.begin(), a.idx_.end(), b.idx_.begin(), b.idx_.end(),
                          std::back_inserter(s.idx_));
    return s;
}

FiniteMetricSpace::FiniteMetricSpace(int n, std::vector<double> flat_dist, TriangleCheck check,
                                     std::vector<std::string> labels)
    : n_(n), dist_(std::move(flat_dist)), labels_(std::move(labels)) {
    if (n_ <= 0) throw std::invalid_argument("metric space needs at least one point");
    if (dist_.size() != static_cast<std::size_t>(n_) * n_)
        throw std::invalid_argument("distance matrix size mismatch");
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("label count mismatch");
    for (int i = 0; i < n_; ++i) {
        if (std::abs(dist(i, i)) > kSymmetryTol)
            throw std::invalid_argument("distance matrix diagonal must be zero");
        dist_[static_cast<std::size_t>(i) * n_ + i] = 0.0;
        for (int j = i + 1; j < n_; ++j) {
            const double a = dist(i, j), b = dist(j, i);
            if (a < 0.0 || b < 0.0) throw std::invalid_argument("distances must be non-negative");
            if (std::abs(a - b) > kSymmetryTol)
                throw std::invalid_argument("distance matrix must be symmetric");
            dist_[static_cast<std::size_t>(j) * n_ + i] = a;  // exact symmetry after load
        }
    }
    if (check == TriangleCheck::Enforce) {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                for (int k = 0; k < n_; ++k)
                    if (dist(i, k) > dist(i, j) + dist(j, k) + kTriangleTol)
                        throw std::invalid_argument("triangle inequality violated");
    }
}

FiniteMetricSpace FiniteMetricSpace::from_matrix(const std::vector<std::vector<double>>& rows,
                                                 TriangleCheck check) {
    const int n = static_cast<int>(rows.size());
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (row.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("distance matrix must be square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return FiniteMetricSpace(n, std::move(flat), check);
}

PointCloud::PointCloud(int dim) : dim_(dim) {
    if (dim_ < 1) throw std::invalid_argument("point dimension must be >= 1");
}

PointCloud PointCloud::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw std::invalid_argument("empty point cloud");
    PointCloud cloud(static_cast<int>(rows.front().size()));
    for (const auto& row : rows) cloud.add(row);
    return cloud;
}

void PointCloud::add(std::span<const double> coords) {
    if (coords.size() != static_cast<std::size_t>(dim_))
        throw std::invalid_argument("point dimension mismatch");
    coords_.insert(coords_.end(), coords.begin(), coords.end());
    ++count_;
}

double PointCloud::euclidean(int i, int j) const {
    const auto p = point(i), q = point(j);
    double sq = 0.0;
    for (int d = 0; d < dim_; ++d) {
        const double diff = p[static_cast<std::size_t>(d)] - q[static_cast<std::size_t>(d)];
        sq += diff * diff;
    }
    return std::sqrt(sq);
}

FiniteMetricSpace PointCloud::to_metric_space(FiniteMetricSpace::TriangleCheck check) const {
    std::vector<double> flat(static_cast<std::size_t>(count_) * count_, 0.0);
    for (int i = 0; i < count_; ++i)
        for (int j = i + 1; j < count_; ++j) {
            const double d = euclidean(i, j);
            flat[static_cast<std::size_t>(i) * count_ + j] = d;
            flat[static_cast<std::size_t>(j) * count_ + i] = d;
        }
    return FiniteMetricSpace(count_, std::move(flat), check);
}

double diameter(const FiniteMetricSpace& space, const Subset& s) {
    if (s.empty()) throw std::invalid_argument("undefined diameter");
    double best = 0.0;
    for (int a = 0; a < s.size(); ++a)
        for (int b = a + 1; b < s.size(); ++b) best = std::max(best, space.dist(s[a], s[b]));
    return best;
}

Subset open_ball(const FiniteMetricSpace& space, int center, double r) {
    if (r <= 0.0) throw std::invalid_argument("ball radius must be positive");
    if (center < 0 || center >= space.size()) throw std::invalid_argument("center out of range");
    std::vector<int> hit;
    for (int i = 0; i < space.size(); ++i)
        if (space.dist(i, center) < r) hit.push_back(i);
    return Subset::from_sorted(std::move(hit));
}

Subset epsilon_net(const FiniteMetricSpace& space, double eps, int seed_index) {
    if (eps <= 0.0) throw std::invalid_argument("net radius must be positive");
    if (seed_index < 0 || seed_index >= space.size())
        throw std::invalid_argument("seed index out of range");
    std::vector<int> net{seed_index};
    std::vector<double> nearest(static_cast<std::size_t>(space.size()));
    for (int i = 0; i < space.size(); ++i) nearest[static_cast<std::size_t>(i)] = space.dist(i, seed_index);
    while (true) {
        int far = 0;
        for (int i = 1; i < space.size(); ++i)
            if (nearest[static_cast<std::size_t>(i)] > nearest[static_cast<std::size_t>(far)]) far = i;
        if (nearest[static_cast<std::size_t>(far)] < eps) break;
        net.push_back(far);
        for (int i = 0; i < space.size(); ++i)
            nearest[static_cast<std::size_t>(i)] =
                std::min(nearest[static_cast<std::size_t>(i)], space.dist(i, far));
    }
    return Subset::of(std::move(net));
}

namespace {
double directed_hausdorff(const FiniteMetricSpace& space, const Subset& a, const Subset& b) {
    double worst = 0.0;
    for (int x : a) {
        double best = std::numeric_limits<double>::infinity();
        for (int y : b) best = std::min(best, space.dist(x, y));
        worst = std::max(worst, best);
    }
    return worst;
}
}  // namespace

double hausdorff_distance(const FiniteMetricSpace& space, const Subset& a, const Subset& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff distance needs nonempty sets");
    return std::max(directed_hausdorff(space, a, b), directed_hausdorff(space, b, a));
}

}  // namespace vietlab
