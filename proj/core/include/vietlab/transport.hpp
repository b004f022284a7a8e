#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "vietlab/metric_space.hpp"

namespace vietlab {

/// Finitely supported probability measure on a FiniteMetricSpace. Atoms are
/// sorted by point index, weights strictly positive (atoms below 1e-12 are
/// pruned and the mass renormalized), and the total weight is 1 within 1e-9.
class DiscreteMeasure {
public:
    struct Atom {
        int point;
        double weight;
        bool operator==(const Atom&) const = default;
    };

    static DiscreteMeasure from_atoms(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    int size() const { return static_cast<int>(atoms_.size()); }
    double weight_at(int point) const;
    Subset support() const;

    bool operator==(const DiscreteMeasure&) const = default;

    static constexpr double kPruneTol = 1e-12;
    static constexpr double kMassTol = 1e-9;

private:
    std::vector<Atom> atoms_;
};

/// Unit mass at one point.
DiscreteMeasure dirac(int point);

/// (1-t)*mu + t*nu with merged atoms; zero-weight atoms pruned. t in [0,1].
DiscreteMeasure convex_combination(double t, const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// Max atom-wise weight difference over the union of supports.
bool approx_equal(const DiscreteMeasure& a, const DiscreteMeasure& b, double tol = 1e-12);

/// Joint measure on atom pairs with prescribed marginals (row sums = weights
/// of the first measure, column sums = weights of the second, within 1e-9).
struct Coupling {
    std::vector<int> row_points;
    std::vector<double> row_weights;
    std::vector<int> col_points;
    std::vector<double> col_weights;
    std::vector<double> flow;  // row-major, rows x cols

    double entry(int i, int j) const {
        return flow[static_cast<std::size_t>(i) * col_points.size() + static_cast<std::size_t>(j)];
    }
};

struct TransportPlan {
    double distance;
    Coupling coupling;
};

/// Exact q-Wasserstein distance between two measures, solved as a
/// transportation problem on the support-by-support cost matrix d^q
/// (transportation simplex: northwest-corner start, cycle pivoting, Bland's
/// rule against cycling). Returns the distance and one optimal coupling;
/// which optimal vertex is returned depends on pivot order, only the value is
/// contract-stable.
TransportPlan wasserstein(const FiniteMetricSpace& space, const DiscreteMeasure& mu,
                          const DiscreteMeasure& nu, double q = 1.0);

/// (sum entries * d^q)^(1/q); throws on marginal violation beyond 1e-9.
double coupling_cost(const FiniteMetricSpace& space, const Coupling& coupling, double q);

/// Sum of weights of atoms whose point lies in s.
double measure_of_set(const DiscreteMeasure& mu, const Subset& s);

/// Weighted sum of f over the support.
double integrate(const DiscreteMeasure& mu, const std::function<double(int)>& f);

}  // namespace vietlab
