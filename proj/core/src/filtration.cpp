#include "vietlab/filtration.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace vietlab {

namespace {
bool entry_order(const FiltrationEntry& a, const FiltrationEntry& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.simplex.size() != b.simplex.size()) return a.simplex.size() < b.simplex.size();
    return a.simplex < b.simplex;
}
}  // namespace

std::size_t SubsetHash::operator()(const Subset& s) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : s) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h;
}

Filtration::Filtration(int vertex_count, int max_dim, double r_max, std::string source,
                       std::vector<FiltrationEntry> entries)
    : vertex_count_(vertex_count), max_dim_(max_dim), r_max_(r_max),
      source_(std::move(source)), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), entry_order);
}

void Filtration::validate() const {
    std::unordered_map<Subset, std::size_t, SubsetHash> position;
    position.reserve(entries_.size());
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        const auto& entry = entries_[k];
        if (entry.simplex.empty() || entry.simplex.size() - 1 > max_dim_)
            throw std::invalid_argument("not a filtration");
        for (int drop = 0; drop < entry.simplex.size() && entry.simplex.size() > 1; ++drop) {
            const Subset face = entry.simplex.without(drop);
            const auto it = position.find(face);
            if (it == position.end() || entries_[it->second].value > entry.value)
                throw std::invalid_argument("not a filtration");
        }
        if (position.count(entry.simplex)) throw std::invalid_argument("not a filtration");
        position.emplace(entry.simplex, k);
    }
}

Filtration build_vr_filtration(const FiniteMetricSpace& space, int max_dim, double r_max) {
    if (r_max <= 0.0) throw std::invalid_argument("r_max must be positive");
    const int n = space.size();
    std::vector<FiltrationEntry> entries;
    std::vector<std::vector<int>> later_neighbors(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (space.dist(i, j) < r_max) later_neighbors[static_cast<std::size_t>(i)].push_back(j);

    std::vector<int> simplex;
    auto recurse = [&](auto&& self, const std::vector<int>& cand, double diam) -> void {
        entries.push_back({Subset::from_sorted(simplex), diam});
        if (static_cast<int>(simplex.size()) == max_dim + 1) return;
        for (std::size_t k = 0; k < cand.size(); ++k) {
            const int u = cand[k];
            double next_diam = diam;
            for (int w : simplex) next_diam = std::max(next_diam, space.dist(w, u));
            std::vector<int> next;
            const auto& nbr = later_neighbors[static_cast<std::size_t>(u)];
            std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(k) + 1, cand.end(),
                                  nbr.begin(), nbr.end(), std::back_inserter(next));
            simplex.push_back(u);
            self(self, next, next_diam);
            simplex.pop_back();
        }
    };
    for (int v = 0; v < n; ++v) {
        simplex.assign(1, v);
        recurse(recurse, later_neighbors[static_cast<std::size_t>(v)], 0.0);
    }
    return Filtration(n, max_dim, r_max, "vr", std::move(entries));
}

SimplicialComplex complex_at(const Filtration& filtration, double v) {
    SimplicialComplex complex(filtration.vertex_count(), filtration.max_dim());
    for (const auto& entry : filtration.entries())
        if (entry.value <= v) complex.add(entry.simplex);
    complex.finalize();
    return complex;
}

std::vector<double> critical_values(const Filtration& filtration) {
    std::vector<double> values;
    values.reserve(filtration.entries().size());
    for (const auto& entry : filtration.entries()) values.push_back(entry.value);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

}  // namespace vietlab
