#include "vietlab/local_structure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vietlab {

Subset DisjointSystem::set_union_all() const {
    Subset all;
    for (const auto& s : sets) all = set_union(all, s);
    return all;
}

DisjointSystem make_disjoint_system(const ThickeningSpec& spec, DiscreteMeasure base,
                                    std::vector<Subset> sets) {
    if (sets.size() != base.atoms().size())
        throw std::invalid_argument("system needs one set per atom");
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!sets[i].contains(base.atoms()[i].point))
            throw std::invalid_argument("atom must lie in its own set");
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (!set_intersection(sets[i], sets[j]).empty())
                throw std::invalid_argument("system sets must be pairwise disjoint");
    }
    DisjointSystem sys{std::move(base), std::move(sets)};
    if (!contains_set(*spec.space, spec.cover, sys.set_union_all()))
        throw std::invalid_argument("system union must lie in a cover element");
    return sys;
}

TestFunctionFamily TestFunctionFamily::from_values(std::vector<std::vector<double>> values) {
    if (values.empty()) throw std::invalid_argument("empty test function family");
    TestFunctionFamily family;
    double max_abs = 0.0;
    for (const auto& h : values)
        for (double v : h) max_abs = std::max(max_abs, std::abs(v));
    family.values = std::move(values);
    family.bound = 1.0 + max_abs;
    return family;
}

double TestFunctionFamily::evaluate(int function, const DiscreteMeasure& mu) const {
    const auto& h = values[static_cast<std::size_t>(function)];
    double total = 0.0;
    for (const auto& atom : mu.atoms()) total += atom.weight * h[static_cast<std::size_t>(atom.point)];
    return total;
}

bool in_basis_N(const DisjointSystem& sys, double eps, const DiscreteMeasure& nu) {
    for (std::size_t i = 0; i < sys.sets.size(); ++i) {
        const double eta_mass = sys.base.atoms()[i].weight;  // sets are disjoint, one atom each
        if (std::abs(eta_mass - measure_of_set(nu, sys.sets[i])) >= eps) return false;
    }
    return true;
}

bool in_basis_O(const DiscreteMeasure& eta, const TestFunctionFamily& family, double eps,
                const DiscreteMeasure& nu) {
    for (std::size_t t = 0; t < family.values.size(); ++t)
        if (std::abs(family.evaluate(static_cast<int>(t), eta) -
                     family.evaluate(static_cast<int>(t), nu)) >= eps)
            return false;
    return true;
}

ShrinkResult shrink_basis(const ThickeningSpec& spec, const DisjointSystem& sys, double eps,
                          const DiscreteMeasure& nu) {
    if (!member(spec, nu)) throw std::invalid_argument("measure outside the thickening");
    if (!in_basis_N(sys, eps, nu)) throw std::invalid_argument("measure outside the neighborhood");
    const int m = nu.size();
    double slack = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sys.sets.size(); ++i)
        slack = std::min(slack, eps - std::abs(sys.base.atoms()[i].weight -
                                               measure_of_set(nu, sys.sets[i])));
    const double delta = slack / (2.0 * m);
    // minimal placement: each atom's neighborhood is the singleton {a_j}; it
    // lies inside whichever U_i contains a_j, and the union is supp(nu)
    std::vector<Subset> singletons;
    singletons.reserve(static_cast<std::size_t>(m));
    for (const auto& atom : nu.atoms()) singletons.push_back(Subset::of({atom.point}));
    return ShrinkResult{make_disjoint_system(spec, nu, std::move(singletons)), delta};
}

TestFunctionFamily separating_functions(int point_count, const DisjointSystem& sys) {
    std::vector<std::vector<double>> values;
    const std::size_t n = sys.sets.size();
    values.reserve(2 * n);
    for (const auto& set : sys.sets) {
        std::vector<double> f(static_cast<std::size_t>(point_count), 0.0);
        for (int p : set) f[static_cast<std::size_t>(p)] = 1.0;
        values.push_back(std::move(f));
    }
    for (const auto& atom : sys.base.atoms()) {
        std::vector<double> g(static_cast<std::size_t>(point_count), 0.0);
        g[static_cast<std::size_t>(atom.point)] = 1.0;
        values.push_back(std::move(g));
    }
    return TestFunctionFamily::from_values(std::move(values));
}

RefineResult refine_to_O(const ThickeningSpec& spec, const DiscreteMeasure& eta,
                         const TestFunctionFamily& family, double eps) {
    const int n = eta.size();
    const double delta = eps / (family.bound * (2.0 * n + 1.0));
    std::vector<Subset> singletons;
    singletons.reserve(static_cast<std::size_t>(n));
    for (const auto& atom : eta.atoms()) singletons.push_back(Subset::of({atom.point}));
    return RefineResult{make_disjoint_system(spec, eta, std::move(singletons)), delta};
}

bool in_P_lower(const DiscreteMeasure& mu, const Subset& u) {
    for (const auto& atom : mu.atoms())
        if (u.contains(atom.point)) return true;
    return false;
}

bool in_P_upper(const DiscreteMeasure& mu, const Subset& y) {
    return mu.support().is_subset_of(y);
}

bool in_P_system(const DiscreteMeasure& mu, const std::vector<Subset>& sets) {
    return std::all_of(sets.begin(), sets.end(),
                       [&](const Subset& u) { return in_P_lower(mu, u); });
}

bool in_P_blocks(const DiscreteMeasure& mu, const DisjointSystem& sys, double eps,
                 const DiscreteMeasure& nu) {
    if (!in_P_upper(nu, sys.set_union_all())) return false;
    for (const auto& set : sys.sets)
        if (std::abs(measure_of_set(nu, set) - measure_of_set(mu, set)) > eps) return false;
    return true;
}

DiscreteMeasure redistribution_witness(const DisjointSystem& sys, const DiscreteMeasure& zeta) {
    std::vector<DiscreteMeasure::Atom> atoms;
    for (std::size_t i = 0; i < sys.sets.size(); ++i) {
        std::vector<int> block;
        for (const auto& atom : zeta.atoms())
            if (sys.sets[i].contains(atom.point)) block.push_back(atom.point);
        if (block.empty())
            throw std::invalid_argument("support misses a system set");
        const double share = sys.base.atoms()[i].weight / static_cast<double>(block.size());
        for (int p : block) atoms.push_back({p, share});
    }
    return DiscreteMeasure::from_atoms(std::move(atoms));
}

std::vector<DiscreteMeasure> retraction_path(const ThickeningSpec& spec, const DisjointSystem& sys,
                                             const DiscreteMeasure& zeta, int steps) {
    const DiscreteMeasure witness = redistribution_witness(sys, zeta);
    std::vector<DiscreteMeasure> path = straight_line_path(spec, zeta, witness, steps);
    // second stage stays inside the convex block-mass set: block masses are
    // exactly the base's along the whole segment
    for (int i = 1; i <= steps; ++i)
        path.push_back(convex_combination(static_cast<double>(i) / steps, witness, sys.base));
    return path;
}

}  // namespace vietlab
