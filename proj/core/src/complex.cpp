#include "vietlab/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace vietlab {

SimplicialComplex::SimplicialComplex(int vertex_count, int max_dim)
    : vertex_count_(vertex_count), max_dim_(max_dim),
      by_dim_(static_cast<std::size_t>(max_dim) + 1) {
    if (max_dim < 0) throw std::invalid_argument("max_dim must be >= 0");
}

std::vector<int> SimplicialComplex::counts() const {
    std::vector<int> out;
    out.reserve(by_dim_.size());
    for (const auto& level : by_dim_) out.push_back(static_cast<int>(level.size()));
    return out;
}

std::size_t SimplicialComplex::simplex_count() const {
    std::size_t total = 0;
    for (const auto& level : by_dim_) total += level.size();
    return total;
}

bool SimplicialComplex::contains(const Subset& simplex) const {
    const int dim = simplex.size() - 1;
    if (dim < 0 || dim > max_dim_) return false;
    const auto& level = by_dim_[static_cast<std::size_t>(dim)];
    return std::binary_search(level.begin(), level.end(), simplex);
}

void SimplicialComplex::add(Subset simplex) {
    const int dim = simplex.size() - 1;
    if (dim < 0 || dim > max_dim_) throw std::invalid_argument("simplex dimension out of range");
    by_dim_[static_cast<std::size_t>(dim)].push_back(std::move(simplex));
}

void SimplicialComplex::finalize() {
    for (auto& level : by_dim_) std::sort(level.begin(), level.end());
}

namespace {

// Clique expansion of the strict r-threshold graph by ordered backtracking
// over neighbor intersections; emits simplices in lexicographic DFS order.
void expand_cliques(const FiniteMetricSpace& space, double r, int max_dim,
                    SimplicialComplex& out) {
    const int n = space.size();
    std::vector<std::vector<int>> later_neighbors(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (space.dist(i, j) < r) later_neighbors[static_cast<std::size_t>(i)].push_back(j);

    std::vector<int> simplex;
    auto recurse = [&](auto&& self, const std::vector<int>& cand) -> void {
        out.add(Subset::from_sorted(simplex));
        if (static_cast<int>(simplex.size()) == max_dim + 1) return;
        for (std::size_t k = 0; k < cand.size(); ++k) {
            const int u = cand[k];
            std::vector<int> next;
            const auto& nbr = later_neighbors[static_cast<std::size_t>(u)];
            std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(k) + 1, cand.end(),
                                  nbr.begin(), nbr.end(), std::back_inserter(next));
            simplex.push_back(u);
            self(self, next);
            simplex.pop_back();
        }
    };
    for (int v = 0; v < n; ++v) {
        simplex.assign(1, v);
        recurse(recurse, later_neighbors[static_cast<std::size_t>(v)]);
    }
}

// Incremental expansion: extend a contained simplex by larger vertices, testing
// containment per candidate. Complete because containment is downward closed.
void expand_generic(const FiniteMetricSpace& space, const Cover& cover, int max_dim,
                    SimplicialComplex& out) {
    const int n = space.size();
    std::vector<int> simplex;
    auto recurse = [&](auto&& self) -> void {
        out.add(Subset::from_sorted(simplex));
        if (static_cast<int>(simplex.size()) == max_dim + 1) return;
        for (int u = simplex.back() + 1; u < n; ++u) {
            simplex.push_back(u);
            if (contains_set(space, cover, Subset::from_sorted(simplex))) self(self);
            simplex.pop_back();
        }
    };
    for (int v = 0; v < n; ++v) {
        simplex.assign(1, v);
        if (contains_set(space, cover, Subset::from_sorted(simplex))) recurse(recurse);
    }
}

}  // namespace

SimplicialComplex vietoris_complex(const FiniteMetricSpace& space, const Cover& cover,
                                   int max_dim) {
    SimplicialComplex out(space.size(), max_dim);
    bool done = false;
    cover.visit([&](const auto& c) {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, DiameterCover>) {
            expand_cliques(space, c.r, max_dim, out);
            done = true;
        }
    });
    if (!done) expand_generic(space, cover, max_dim, out);
    out.finalize();
    return out;
}

Nerve nerve_complex(const FiniteMetricSpace& space, const Cover& cover, int max_dim) {
    if (!cover.is_explicit()) throw std::invalid_argument("nerve requires explicit cover");
    const auto& elements = cover.as_explicit().elements;
    for (const auto& element : elements)
        if (!element.empty() && element[element.size() - 1] >= space.size())
            throw std::invalid_argument("cover element index out of range");
    const int m = static_cast<int>(elements.size());
    SimplicialComplex complex(m, max_dim);
    std::vector<int> simplex;
    auto recurse = [&](auto&& self, const Subset& intersection) -> void {
        complex.add(Subset::from_sorted(simplex));
        if (static_cast<int>(simplex.size()) == max_dim + 1) return;
        for (int j = simplex.back() + 1; j < m; ++j) {
            const Subset next = set_intersection(intersection, elements[static_cast<std::size_t>(j)]);
            if (next.empty()) continue;
            simplex.push_back(j);
            self(self, next);
            simplex.pop_back();
        }
    };
    for (int i = 0; i < m; ++i) {
        simplex.assign(1, i);
        recurse(recurse, elements[static_cast<std::size_t>(i)]);
    }
    complex.finalize();
    return Nerve{std::move(complex)};
}

int euler_characteristic(const SimplicialComplex& complex) {
    int chi = 0;
    int sign = 1;
    for (int count : complex.counts()) {
        chi += sign * count;
        sign = -sign;
    }
    return chi;
}

}  // namespace vietlab
