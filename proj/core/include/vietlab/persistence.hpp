#pragma once

#include <limits>
#include <vector>

#include "vietlab/complex.hpp"
#include "vietlab/filtration.hpp"

namespace vietlab {

struct PersistenceBar {
    double birth;
    double death;  // +infinity for essential classes (alive past r_max)
    bool essential() const { return death == std::numeric_limits<double>::infinity(); }
    double length() const { return death - birth; }
};

/// Birth-death multisets per homology dimension, Z/2 coefficients. Bars read
/// as half-open intervals (birth, death] in the scale parameter; zero-length
/// pairs are dropped. Classes in the filtration's top simplex dimension can
/// never be killed (no cofaces are present), so request one dimension above
/// the homology you need.
struct PersistenceDiagram {
    std::vector<std::vector<PersistenceBar>> dims;
    double r_max = 0.0;

    const std::vector<PersistenceBar>& bars(int dim) const {
        return dims[static_cast<std::size_t>(dim)];
    }
    int max_dim() const { return static_cast<int>(dims.size()) - 1; }
    /// Bars alive at every parameter value in [lo, hi]: birth < lo, death >= hi.
    int alive_through(int dim, double lo, double hi) const;
};

/// Standard Z/2 column reduction with the clearing optimization (dimensions
/// processed top-down). Ties in filtration value break by dimension then
/// lexicographic vertex order, so diagrams are deterministic.
PersistenceDiagram persistence(const Filtration& filtration);

/// Z/2 Betti numbers b_0..b_max_dim of a static complex, by Gaussian
/// elimination on the boundary matrices. Independent of the reduction path
/// used by persistence(); serves as its cross-check oracle.
std::vector<int> betti_numbers(const SimplicialComplex& complex, int max_dim);

/// Min over partial matchings (diagonal allowed) of the max infinity-norm
/// displacement, via binary search over candidate radii plus bipartite
/// matching feasibility. Essential bars match essential bars only; a count
/// mismatch gives +infinity.
double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim);

}  // namespace vietlab
