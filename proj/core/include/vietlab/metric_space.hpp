#pragma once

#include <span>
#include <string>
#include <vector>

namespace vietlab {

/// Sorted set of point indices into a FiniteMetricSpace. Indices are strictly
/// increasing; duplicates are rejected at construction.
class Subset {
public:
    Subset() = default;

    /// Wraps an already strictly-increasing index list (validated).
    static Subset from_sorted(std::vector<int> indices);
    /// Sorts the indices; duplicates are an error.
    static Subset of(std::vector<int> indices);
    /// {0, 1, ..., n-1}
    static Subset full(int n);

    int size() const { return static_cast<int>(idx_.size()); }
    bool empty() const { return idx_.empty(); }
    int operator[](int k) const { return idx_[static_cast<std::size_t>(k)]; }
    const std::vector<int>& indices() const { return idx_; }
    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }

    bool contains(int index) const;
    bool is_subset_of(const Subset& other) const;

    Subset with(int index) const;     // insert one index (no-op if present)
    Subset without(int pos) const;    // drop the element at position pos

    friend Subset set_union(const Subset& a, const Subset& b);
    friend Subset set_intersection(const Subset& a, const Subset& b);

    bool operator==(const Subset&) const = default;
    auto operator<=>(const Subset&) const = default;

private:
    std::vector<int> idx_;
};

Subset set_union(const Subset& a, const Subset& b);
Subset set_intersection(const Subset& a, const Subset& b);

/// Finite metric space: point count plus a symmetric distance matrix with
/// zero diagonal. The triangle inequality is checked on construction unless
/// skipped (sampled thickening spaces are large; the property suite covers
/// them on random triples instead).
class FiniteMetricSpace {
public:
    enum class TriangleCheck { Enforce, Skip };

    FiniteMetricSpace(int n, std::vector<double> flat_dist,
                      TriangleCheck check = TriangleCheck::Enforce,
                      std::vector<std::string> labels = {});

    static FiniteMetricSpace from_matrix(const std::vector<std::vector<double>>& rows,
                                         TriangleCheck check = TriangleCheck::Enforce);

    int size() const { return n_; }
    double dist(int i, int j) const { return dist_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<double>& flat() const { return dist_; }
    const std::vector<std::string>& labels() const { return labels_; }

    static constexpr double kSymmetryTol = 1e-9;
    static constexpr double kTriangleTol = 1e-9;

private:
    int n_ = 0;
    std::vector<double> dist_;
    std::vector<std::string> labels_;
};

/// Point cloud in R^D; all rows share the dimension D >= 1. Induces a
/// FiniteMetricSpace through the Euclidean distance.
class PointCloud {
public:
    explicit PointCloud(int dim);
    static PointCloud from_rows(const std::vector<std::vector<double>>& rows);

    void add(std::span<const double> coords);
    int size() const { return count_; }
    int dim() const { return dim_; }
    std::span<const double> point(int i) const {
        return {coords_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
    }

    double euclidean(int i, int j) const;

    // Euclidean distances satisfy the triangle inequality by construction, so
    // the O(n^3) check is skipped by default.
    FiniteMetricSpace to_metric_space(FiniteMetricSpace::TriangleCheck check =
                                          FiniteMetricSpace::TriangleCheck::Skip) const;

private:
    int dim_ = 0;
    int count_ = 0;
    std::vector<double> coords_;
};

/// Max pairwise distance over a nonempty subset; 0 for singletons.
double diameter(const FiniteMetricSpace& space, const Subset& s);

/// All indices at strict distance < r from the center. Requires r > 0.
Subset open_ball(const FiniteMetricSpace& space, int center, double r);

/// Greedy farthest-point net starting from seed_index: points are added until
/// every point of the space lies strictly within eps of the net. Ties break
/// toward the smallest index, so the result is deterministic.
Subset epsilon_net(const FiniteMetricSpace& space, double eps, int seed_index);

/// Symmetric Hausdorff distance between two nonempty subsets.
double hausdorff_distance(const FiniteMetricSpace& space, const Subset& a, const Subset& b);

}  // namespace vietlab
