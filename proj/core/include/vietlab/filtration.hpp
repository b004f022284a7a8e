#pragma once

#include <string>
#include <vector>

#include "vietlab/complex.hpp"
#include "vietlab/metric_space.hpp"

namespace vietlab {

struct FiltrationEntry {
    Subset simplex;
    double value;
};

struct SubsetHash {
    std::size_t operator()(const Subset& s) const;
};

/// Simplices sorted by (value, dimension, lexicographic vertex order), so
/// faces precede cofaces and ties break deterministically. Values are
/// sublevel parameters: the complex at parameter r > v contains every simplex
/// of value <= v (the strict-< convention reads bars as half-open (b, d]).
class Filtration {
public:
    Filtration(int vertex_count, int max_dim, double r_max, std::string source,
               std::vector<FiltrationEntry> entries);

    int vertex_count() const { return vertex_count_; }
    int max_dim() const { return max_dim_; }
    double r_max() const { return r_max_; }
    const std::string& source() const { return source_; }
    const std::vector<FiltrationEntry>& entries() const { return entries_; }

    /// Throws "not a filtration" when a face follows a coface or carries a
    /// larger value.
    void validate() const;

private:
    int vertex_count_;
    int max_dim_;
    double r_max_;
    std::string source_;
    std::vector<FiltrationEntry> entries_;
};

/// Every simplex of dimension <= max_dim and diameter < r_max, entering at its
/// diameter (vertices at 0).
Filtration build_vr_filtration(const FiniteMetricSpace& space, int max_dim, double r_max);

/// Static snapshot containing the simplices with value <= v.
SimplicialComplex complex_at(const Filtration& filtration, double v);

/// Sorted distinct filtration values.
std::vector<double> critical_values(const Filtration& filtration);

}  // namespace vietlab
