#include "vietlab/audits.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vietlab/sampling.hpp"

namespace vietlab {

namespace {

struct SystemInstance {
    ThickeningSpec spec;
    Subset pool;       // support pool, contained in one cover element
    DisjointSystem sys;
    double eps;
};

std::string describe(const DiscreteMeasure& mu) {
    std::ostringstream out;
    out << "{";
    for (std::size_t k = 0; k < mu.atoms().size(); ++k) {
        if (k) out << ", ";
        out << mu.atoms()[k].point << ":" << mu.atoms()[k].weight;
    }
    out << "}";
    return out.str();
}

SystemInstance make_instance(std::uint64_t seed) {
    Rng rng(seed);
    const int n = rng.uniform_int(10, 14);
    const PointCloud cloud = random_point_cloud(n, 2, 2.0, rng);
    auto space = std::make_shared<FiniteMetricSpace>(cloud.to_metric_space());

    const double diam = diameter(*space, Subset::full(n));
    const int anchor = rng.uniform_int(0, n - 1);
    double rho = 0.35 * diam;
    Subset pool = open_ball(*space, anchor, rho);
    while (pool.size() < 7) {
        rho *= 1.3;
        pool = open_ball(*space, anchor, rho);
    }
    const double cover_r = std::max(2.0 * rho * 1.2, diam * 0.1);
    ThickeningSpec spec{space, Cover(DiameterCover{cover_r}), 1.0};

    const int atom_count = rng.uniform_int(1, std::min(4, pool.size() - 2));
    std::vector<int> shuffled(pool.begin(), pool.end());
    for (std::size_t i = 0; i < shuffled.size(); ++i) {
        const int j = rng.uniform_int(static_cast<int>(i), static_cast<int>(shuffled.size()) - 1);
        std::swap(shuffled[i], shuffled[static_cast<std::size_t>(j)]);
    }
    std::vector<DiscreteMeasure::Atom> atoms;
    const auto weights = rng.simplex_point(atom_count);
    for (int i = 0; i < atom_count; ++i)
        atoms.push_back({shuffled[static_cast<std::size_t>(i)], weights[static_cast<std::size_t>(i)]});
    DiscreteMeasure base = DiscreteMeasure::from_atoms(std::move(atoms));

    // distribute further pool points into the disjoint sets; the rest stay in
    // the pool but outside the system union
    std::vector<std::vector<int>> sets(static_cast<std::size_t>(base.size()));
    for (int i = 0; i < base.size(); ++i) sets[static_cast<std::size_t>(i)].push_back(base.atoms()[static_cast<std::size_t>(i)].point);
    for (std::size_t k = static_cast<std::size_t>(atom_count); k < shuffled.size(); ++k) {
        if (rng.uniform() < 0.3) continue;  // leave outside the union
        sets[static_cast<std::size_t>(rng.uniform_int(0, base.size() - 1))].push_back(shuffled[k]);
    }
    std::vector<Subset> subsets;
    for (auto& s : sets) subsets.push_back(Subset::of(std::move(s)));

    SystemInstance instance{spec, pool, make_disjoint_system(spec, base, std::move(subsets)),
                            rng.uniform(0.08, 0.3)};
    return instance;
}

// Measure with block masses within (strictly) radius of the system's, support
// inside the pool. Constructive perturbation filtered through in_basis_N; the
// system base itself is the always-valid fallback.
DiscreteMeasure sample_in_N(const SystemInstance& instance, const DisjointSystem& sys,
                            double radius, Rng& rng) {
    std::vector<int> outside;
    const Subset all = sys.set_union_all();
    for (int p : instance.pool)
        if (!all.contains(p)) outside.push_back(p);

    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<DiscreteMeasure::Atom> atoms;
        double assigned = 0.0;
        for (std::size_t i = 0; i < sys.sets.size(); ++i) {
            double q = sys.base.atoms()[i].weight + rng.uniform(-0.6 * radius, 0.6 * radius);
            q = std::max(q, 0.0);
            assigned += q;
            // split the block mass over a random nonempty subset of the block
            std::vector<int> block(sys.sets[i].begin(), sys.sets[i].end());
            const int take = rng.uniform_int(1, static_cast<int>(block.size()));
            for (int t = 0; t < take; ++t) {
                const int j = rng.uniform_int(t, static_cast<int>(block.size()) - 1);
                std::swap(block[static_cast<std::size_t>(t)], block[static_cast<std::size_t>(j)]);
            }
            const auto split = rng.simplex_point(take);
            for (int t = 0; t < take; ++t)
                if (q * split[static_cast<std::size_t>(t)] > 0.0)
                    atoms.push_back({block[static_cast<std::size_t>(t)], q * split[static_cast<std::size_t>(t)]});
        }
        double leftover = 1.0 - assigned;
        if (leftover > 0.0 && !outside.empty() && rng.uniform() < 0.8) {
            atoms.push_back({outside[static_cast<std::size_t>(rng.uniform_int(
                                 0, static_cast<int>(outside.size()) - 1))],
                             leftover});
        } else if (leftover != 0.0 && !atoms.empty()) {
            atoms.front().weight += leftover;  // fold the remainder into one block
            if (atoms.front().weight <= 0.0) continue;
        }
        if (atoms.empty()) continue;
        DiscreteMeasure candidate = DiscreteMeasure::from_atoms(std::move(atoms));
        if (in_basis_N(sys, radius, candidate) && member(instance.spec, candidate))
            return candidate;
    }
    return sys.base;
}

DiscreteMeasure sample_in_O(const SystemInstance& instance, const DiscreteMeasure& eta,
                            const TestFunctionFamily& family, double eps, Rng& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        const DiscreteMeasure noise = random_measure(instance.pool, 4, rng);
        const DiscreteMeasure candidate =
            convex_combination(rng.uniform(0.0, std::min(1.0, eps)), eta, noise);
        if (in_basis_O(eta, family, eps, candidate)) return candidate;
    }
    return eta;
}

// zeta meeting every system set: one or more points per block plus optional
// extras anywhere in the pool
DiscreteMeasure sample_in_P_system(const SystemInstance& instance, Rng& rng) {
    std::vector<int> points;
    for (const auto& set : instance.sys.sets) {
        std::vector<int> block(set.begin(), set.end());
        const int take = rng.uniform_int(1, static_cast<int>(block.size()));
        for (int t = 0; t < take; ++t) {
            const int j = rng.uniform_int(t, static_cast<int>(block.size()) - 1);
            std::swap(block[static_cast<std::size_t>(t)], block[static_cast<std::size_t>(j)]);
            points.push_back(block[static_cast<std::size_t>(t)]);
        }
    }
    const int extras = rng.uniform_int(0, 2);
    for (int e = 0; e < extras; ++e)
        points.push_back(instance.pool[rng.uniform_int(0, instance.pool.size() - 1)]);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const auto weights = rng.simplex_point(static_cast<int>(points.size()));
    std::vector<DiscreteMeasure::Atom> atoms;
    for (std::size_t k = 0; k < points.size(); ++k) atoms.push_back({points[k], weights[k]});
    return DiscreteMeasure::from_atoms(std::move(atoms));
}

DiscreteMeasure sample_in_P_blocks(const SystemInstance& instance, Rng& rng) {
    const auto& sys = instance.sys;
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<DiscreteMeasure::Atom> atoms;
        for (std::size_t i = 0; i < sys.sets.size(); ++i) {
            double q = sys.base.atoms()[i].weight +
                       rng.uniform(-0.7 * instance.eps, 0.7 * instance.eps);
            q = std::max(q, 0.0);
            std::vector<int> block(sys.sets[i].begin(), sys.sets[i].end());
            const int take = rng.uniform_int(1, static_cast<int>(block.size()));
            for (int t = 0; t < take; ++t) {
                const int j = rng.uniform_int(t, static_cast<int>(block.size()) - 1);
                std::swap(block[static_cast<std::size_t>(t)], block[static_cast<std::size_t>(j)]);
            }
            const auto split = rng.simplex_point(take);
            for (int t = 0; t < take; ++t)
                if (q * split[static_cast<std::size_t>(t)] > 0.0)
                    atoms.push_back({block[static_cast<std::size_t>(t)], q * split[static_cast<std::size_t>(t)]});
        }
        if (atoms.empty()) continue;
        double total = 0.0;
        for (const auto& atom : atoms) total += atom.weight;
        if (total <= 0.0) continue;
        for (auto& atom : atoms) atom.weight /= total;
        DiscreteMeasure candidate = DiscreteMeasure::from_atoms(std::move(atoms));
        if (in_P_blocks(sys.base, sys, instance.eps, candidate)) return candidate;
    }
    return sys.base;
}

struct AuditRun {
    AuditResult result;

    explicit AuditRun(std::string name) { result.name = std::move(name); }

    void record(bool ok, const std::string& detail) {
        ++result.trials;
        if (!ok) {
            ++result.failures;
            if (result.counterexample.empty()) result.counterexample = detail;
        }
    }
};

}  // namespace

std::vector<AuditResult> run_neighborhood_audits(const AuditConfig& config) {
    AuditRun shrink("shrink_basis_inclusion");
    AuditRun separating("separating_functions_inclusion");
    AuditRun refine("refine_to_O_inclusion");
    AuditRun support_convex("support_set_convexity");
    AuditRun block_convex("block_mass_set_convexity");
    AuditRun witness("redistribution_witness");
    AuditRun retraction("retraction_path");
    AuditRun lipschitz("path_lipschitz");

    for (int inst = 0; inst < config.instances; ++inst) {
        const SystemInstance instance = make_instance(config.seed * 1000003ull + static_cast<std::uint64_t>(inst));
        Rng rng(config.seed * 7919ull + static_cast<std::uint64_t>(inst) + 1);
        const auto& sys = instance.sys;
        const double eps = instance.eps;

        shrink.result.instances = separating.result.instances = refine.result.instances =
            support_convex.result.instances = block_convex.result.instances =
                witness.result.instances = retraction.result.instances =
                    lipschitz.result.instances = inst + 1;

        for (int t = 0; t < config.containment_trials; ++t) {
            const DiscreteMeasure nu = sample_in_N(instance, sys, eps, rng);
            const ShrinkResult shrunk = shrink_basis(instance.spec, sys, eps, nu);
            const DiscreteMeasure zeta = sample_in_N(instance, shrunk.system, shrunk.delta, rng);
            shrink.record(in_basis_N(sys, eps, zeta),
                          "nu=" + describe(nu) + " zeta=" + describe(zeta));
        }

        const TestFunctionFamily separators =
            separating_functions(instance.spec.space->size(), sys);
        for (int t = 0; t < config.containment_trials; ++t) {
            const DiscreteMeasure nu = sample_in_O(instance, sys.base, separators, eps, rng);
            separating.record(in_basis_N(sys, eps, nu), "nu=" + describe(nu));
        }

        {
            const int function_count = rng.uniform_int(1, 3);
            std::vector<std::vector<double>> tables(static_cast<std::size_t>(function_count));
            for (auto& h : tables) {
                h.resize(static_cast<std::size_t>(instance.spec.space->size()));
                for (double& v : h) v = rng.uniform(-3.0, 3.0);
            }
            const TestFunctionFamily family = TestFunctionFamily::from_values(std::move(tables));
            const RefineResult refined = refine_to_O(instance.spec, sys.base, family, eps);
            for (int t = 0; t < config.containment_trials; ++t) {
                const DiscreteMeasure nu =
                    sample_in_N(instance, refined.system, refined.delta, rng);
                refine.record(in_basis_O(sys.base, family, eps, nu), "nu=" + describe(nu));
            }
        }

        for (int t = 0; t < config.convexity_trials; ++t) {
            // random sub-pool, so P^Y varies across trials
            std::vector<int> y_points;
            for (int p : instance.pool)
                if (rng.uniform() < 0.7) y_points.push_back(p);
            if (y_points.empty()) y_points.push_back(instance.pool[0]);
            const Subset y = Subset::of(std::move(y_points));
            const DiscreteMeasure a = random_measure(y, 4, rng);
            const DiscreteMeasure b = random_measure(y, 4, rng);
            const DiscreteMeasure mix = convex_combination(rng.uniform(), a, b);
            support_convex.record(in_P_upper(mix, y) && member(instance.spec, mix),
                                  "mix=" + describe(mix));
        }

        for (int t = 0; t < config.convexity_trials; ++t) {
            const DiscreteMeasure a = sample_in_P_blocks(instance, rng);
            const DiscreteMeasure b = sample_in_P_blocks(instance, rng);
            const DiscreteMeasure mix = convex_combination(rng.uniform(), a, b);
            block_convex.record(in_P_blocks(sys.base, sys, eps, mix), "mix=" + describe(mix));
        }

        for (int t = 0; t < config.witness_trials; ++t) {
            const DiscreteMeasure zeta = sample_in_P_system(instance, rng);
            const DiscreteMeasure w = redistribution_witness(sys, zeta);
            bool ok = w.support().is_subset_of(zeta.support());
            ok = ok && in_P_upper(w, sys.set_union_all());
            ok = ok && member(instance.spec, w);
            for (std::size_t i = 0; ok && i < sys.sets.size(); ++i)
                ok = std::abs(measure_of_set(w, sys.sets[i]) - sys.base.atoms()[i].weight) <= 1e-12;
            ok = ok && in_P_blocks(sys.base, sys, eps, w);
            witness.record(ok, "zeta=" + describe(zeta) + " witness=" + describe(w));
        }

        for (int t = 0; t < config.retraction_trials; ++t) {
            const DiscreteMeasure zeta = sample_in_P_system(instance, rng);
            const auto path = retraction_path(instance.spec, sys, zeta, config.path_steps);
            const int s = config.path_steps;
            bool ok = approx_equal(path.back(), sys.base, 1e-12);
            for (int k = 0; ok && k <= s; ++k) ok = member(instance.spec, path[static_cast<std::size_t>(k)]);
            for (int k = s + 1; ok && k <= 2 * s; ++k)
                ok = in_P_blocks(sys.base, sys, eps, path[static_cast<std::size_t>(k)]);
            retraction.record(ok, "zeta=" + describe(zeta));

            // both stages are straight lines; check the Lipschitz bound on all
            // parameter pairs within each stage
            bool lip = true;
            const auto& space = *instance.spec.space;
            for (int stage = 0; lip && stage < 2; ++stage) {
                const int offset = stage * s;
                const double span =
                    wasserstein(space, path[static_cast<std::size_t>(offset)],
                                path[static_cast<std::size_t>(offset + s)], instance.spec.q)
                        .distance;
                for (int a = 0; lip && a <= s; ++a)
                    for (int b = a + 1; lip && b <= s; ++b) {
                        const double d =
                            wasserstein(space, path[static_cast<std::size_t>(offset + a)],
                                        path[static_cast<std::size_t>(offset + b)],
                                        instance.spec.q)
                                .distance;
                        lip = d <= (static_cast<double>(b - a) / s) * span + config.lipschitz_slack;
                    }
            }
            lipschitz.record(lip, "zeta=" + describe(zeta));
        }

        // strictness at the base point: the retraction from the base itself
        // never moves
        {
            const auto path = retraction_path(instance.spec, sys, sys.base, config.path_steps);
            bool constant = true;
            for (const auto& step : path) constant = constant && (step == sys.base);
            retraction.record(constant, "base-point path moved");
        }
    }

    return {shrink.result,       separating.result, refine.result, support_convex.result,
            block_convex.result, witness.result,    retraction.result, lipschitz.result};
}

bool all_passed(const std::vector<AuditResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const AuditResult& r) { return r.passed(); });
}

}  // namespace vietlab
