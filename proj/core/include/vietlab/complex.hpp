#pragma once

#include <vector>

#include "vietlab/cover.hpp"
#include "vietlab/metric_space.hpp"

namespace vietlab {

/// Downward-closed simplicial complex, simplices grouped by dimension.
/// Within a dimension the simplex lists are lexicographically sorted, so
/// construction output is deterministic.
class SimplicialComplex {
public:
    SimplicialComplex(int vertex_count, int max_dim);

    int vertex_count() const { return vertex_count_; }
    int max_dim() const { return max_dim_; }

    const std::vector<Subset>& simplices(int dim) const {
        return by_dim_[static_cast<std::size_t>(dim)];
    }
    std::vector<int> counts() const;
    std::size_t simplex_count() const;
    bool contains(const Subset& simplex) const;

    /// Appends in enumeration order; finalize() sorts each dimension.
    void add(Subset simplex);
    void finalize();

private:
    int vertex_count_;
    int max_dim_;
    std::vector<std::vector<Subset>> by_dim_;
};

/// Simplices are the subsets of size <= max_dim+1 contained in a cover
/// element. A diameter cover is built as the clique expansion of the
/// r-threshold graph; other covers use incremental expansion with
/// per-simplex containment tests.
SimplicialComplex vietoris_complex(const FiniteMetricSpace& space, const Cover& cover, int max_dim);

/// Nerve of an explicit cover: vertex i = element i, a set of elements spans
/// a simplex when their common intersection is nonempty.
struct Nerve {
    SimplicialComplex complex;
};

Nerve nerve_complex(const FiniteMetricSpace& space, const Cover& cover, int max_dim);

int euler_characteristic(const SimplicialComplex& complex);

}  // namespace vietlab
