#include "vietlab/thickening.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace vietlab {

bool member(const ThickeningSpec& spec, const DiscreteMeasure& mu) {
    return contains_set(*spec.space, spec.cover, mu.support());
}

SupportPoint support_point(const DiscreteMeasure& mu) {
    SupportPoint out;
    out.simplex = mu.support();
    out.weights.reserve(mu.atoms().size());
    for (const auto& atom : mu.atoms()) out.weights.push_back(atom.weight);
    return out;
}

SampleTooLarge::SampleTooLarge(std::size_t estimate_, std::size_t cap_)
    : std::runtime_error("sample too large: " + std::to_string(estimate_) + " measures exceed cap " +
                         std::to_string(cap_)),
      estimate(estimate_), cap(cap_) {}

namespace {

std::size_t compositions(int total, int parts) {
    // C(total-1, parts-1): positive integer weights summing to total
    std::size_t result = 1;
    for (int k = 1; k <= parts - 1; ++k)
        result = result * static_cast<std::size_t>(total - k) / static_cast<std::size_t>(k);
    return result;
}

// Supports are exactly the simplices of the Vietoris complex with at most
// max_support vertices.
std::vector<Subset> enumerate_supports(const FiniteMetricSpace& space, const Cover& cover,
                                       int max_support) {
    std::vector<Subset> supports;
    std::vector<int> current;
    auto recurse = [&](auto&& self) -> void {
        supports.push_back(Subset::from_sorted(current));
        if (static_cast<int>(current.size()) == max_support) return;
        for (int u = current.back() + 1; u < space.size(); ++u) {
            current.push_back(u);
            if (contains_set(space, cover, Subset::from_sorted(current))) self(self);
            current.pop_back();
        }
    };
    for (int v = 0; v < space.size(); ++v) {
        current.assign(1, v);
        if (contains_set(space, cover, Subset::from_sorted(current))) recurse(recurse);
    }
    return supports;
}

}  // namespace

SampledThickening sample_thickening(const ThickeningSpec& spec, int grid_m, int max_support,
                                    std::size_t size_cap) {
    if (grid_m < 1) throw std::invalid_argument("grid_m must be >= 1");
    if (max_support < 1) throw std::invalid_argument("max_support must be >= 1");

    const auto supports = enumerate_supports(*spec.space, spec.cover, max_support);
    std::size_t estimate = 0;
    for (const auto& support : supports)
        if (support.size() <= grid_m) estimate += compositions(grid_m, support.size());
    if (estimate > size_cap) throw SampleTooLarge(estimate, size_cap);

    SampledThickening sample;
    sample.grid_m = grid_m;
    sample.max_support = max_support;
    sample.measures.reserve(estimate);
    for (const auto& support : supports) {
        const int k = support.size();
        if (k > grid_m) continue;  // cannot give every atom positive grid weight
        std::vector<int> parts(static_cast<std::size_t>(k), 1);
        // enumerate positive compositions of grid_m in lexicographic order
        auto emit = [&]() {
            std::vector<DiscreteMeasure::Atom> atoms;
            atoms.reserve(static_cast<std::size_t>(k));
            for (int a = 0; a < k; ++a)
                atoms.push_back({support[a], static_cast<double>(parts[static_cast<std::size_t>(a)]) /
                                                 static_cast<double>(grid_m)});
            sample.measures.push_back(DiscreteMeasure::from_atoms(std::move(atoms)));
        };
        auto recurse = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == k - 1) {
                parts[static_cast<std::size_t>(pos)] = remaining;
                emit();
                return;
            }
            for (int take = 1; take <= remaining - (k - 1 - pos); ++take) {
                parts[static_cast<std::size_t>(pos)] = take;
                self(self, pos + 1, remaining - take);
            }
        };
        recurse(recurse, 0, grid_m);
    }

    const int count = static_cast<int>(sample.measures.size());
    std::vector<double> flat(static_cast<std::size_t>(count) * count, 0.0);
    const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(),
                                                   static_cast<unsigned>(count)));
    auto fill_rows = [&](int begin, int end) {
        for (int i = begin; i < end; ++i)
            for (int j = i + 1; j < count; ++j) {
                const double d = wasserstein(*spec.space, sample.measures[static_cast<std::size_t>(i)],
                                             sample.measures[static_cast<std::size_t>(j)], spec.q)
                                     .distance;
                flat[static_cast<std::size_t>(i) * count + j] = d;
                flat[static_cast<std::size_t>(j) * count + i] = d;
            }
    };
    if (workers <= 1 || count < 64) {
        fill_rows(0, count);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            const int begin = static_cast<int>(static_cast<std::size_t>(count) * w / workers);
            const int end = static_cast<int>(static_cast<std::size_t>(count) * (w + 1) / workers);
            pool.emplace_back(fill_rows, begin, end);
        }
        for (auto& t : pool) t.join();
    }
    sample.metric = std::make_shared<FiniteMetricSpace>(count, std::move(flat),
                                                        FiniteMetricSpace::TriangleCheck::Skip);
    return sample;
}

std::vector<DiscreteMeasure> straight_line_path(const ThickeningSpec& spec,
                                                const DiscreteMeasure& zeta,
                                                const DiscreteMeasure& target, int steps) {
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    if (!target.support().is_subset_of(zeta.support()))
        throw std::invalid_argument("path may exit thickening");
    if (!member(spec, zeta) || !member(spec, target))
        throw std::invalid_argument("path endpoints must lie in the thickening");
    std::vector<DiscreteMeasure> path;
    path.reserve(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i)
        path.push_back(convex_combination(static_cast<double>(i) / steps, zeta, target));
    return path;
}

}  // namespace vietlab
