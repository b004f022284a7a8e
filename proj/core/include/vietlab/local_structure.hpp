#pragma once

#include <vector>

#include "vietlab/thickening.hpp"
#include "vietlab/transport.hpp"

namespace vietlab {

/// Base measure eta together with pairwise disjoint sets U_1..U_n, one per
/// atom (atom i lies in sets[i]), whose union is contained in a cover
/// element. On a finite space "disjoint open neighborhoods" are realized as
/// disjoint subsets.
struct DisjointSystem {
    DiscreteMeasure base;
    std::vector<Subset> sets;

    Subset set_union_all() const;
};

DisjointSystem make_disjoint_system(const ThickeningSpec& spec, DiscreteMeasure base,
                                    std::vector<Subset> sets);

/// Real-valued test functions given as value tables over the point set;
/// bound caches 1 + max |h|.
struct TestFunctionFamily {
    std::vector<std::vector<double>> values;
    double bound = 1.0;

    static TestFunctionFamily from_values(std::vector<std::vector<double>> values);
    double evaluate(int function, const DiscreteMeasure& mu) const;
};

/// Block-mass neighborhood: |eta(U_i) - nu(U_i)| < eps for every i.
bool in_basis_N(const DisjointSystem& sys, double eps, const DiscreteMeasure& nu);

/// Test-function neighborhood: |eta(h_t) - nu(h_t)| < eps for every t.
bool in_basis_O(const DiscreteMeasure& eta, const TestFunctionFamily& family, double eps,
                const DiscreteMeasure& nu);

/// Given nu in N(sys, eps), produces a system around nu (singleton sets, one
/// per atom) and delta = min_i(eps - |eta(U_i) - nu(U_i)|) / (2m) such that
/// N(nu-system, delta) is contained in N(sys, eps).
struct ShrinkResult {
    DisjointSystem system;
    double delta;
};

ShrinkResult shrink_basis(const ThickeningSpec& spec, const DisjointSystem& sys, double eps,
                          const DiscreteMeasure& nu);

/// 2n separating functions: the indicator of each U_i and the indicator of
/// each base atom {y_i}. O(eta, family, eps) is contained in N(sys, eps).
TestFunctionFamily separating_functions(int point_count, const DisjointSystem& sys);

/// Given a test-function family, produces the singleton system around eta's
/// atoms and delta = eps / (bound * (2n+1)) such that N(eta-system, delta) is
/// contained in O(eta, family, eps). Singleton sets have zero oscillation, so
/// the construction always succeeds on a finite space.
struct RefineResult {
    DisjointSystem system;
    double delta;
};

RefineResult refine_to_O(const ThickeningSpec& spec, const DiscreteMeasure& eta,
                         const TestFunctionFamily& family, double eps);

/// supp(mu) meets U.
bool in_P_lower(const DiscreteMeasure& mu, const Subset& u);
/// supp(mu) lies inside Y.
bool in_P_upper(const DiscreteMeasure& mu, const Subset& y);
/// supp(mu) meets every set of the collection.
bool in_P_system(const DiscreteMeasure& mu, const std::vector<Subset>& sets);

/// supp(nu) inside the union of the system's sets, and block masses within
/// eps of mu's (non-strict comparison, in contrast to the strict one of N).
bool in_P_blocks(const DiscreteMeasure& mu, const DisjointSystem& sys, double eps,
                 const DiscreteMeasure& nu);

/// For zeta whose support meets every U_i: redistributes each block mass
/// mu(U_i) uniformly over supp(zeta) in U_i. The result has support inside
/// supp(zeta) and exact block masses, so it lies in every P(mu, U, eps).
DiscreteMeasure redistribution_witness(const DisjointSystem& sys, const DiscreteMeasure& zeta);

/// Two-stage retraction onto the system's base measure mu: a straight line
/// from zeta to the redistribution witness (support never grows), then a
/// straight line inside the convex block-mass set from the witness to mu.
/// For zeta = mu the whole path is constantly mu.
std::vector<DiscreteMeasure> retraction_path(const ThickeningSpec& spec, const DisjointSystem& sys,
                                             const DiscreteMeasure& zeta, int steps);

}  // namespace vietlab
