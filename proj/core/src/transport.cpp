#include "vietlab/transport.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace vietlab {

DiscreteMeasure DiscreteMeasure::from_atoms(std::vector<Atom> atoms) {
    if (atoms.empty()) throw std::invalid_argument("measure needs at least one atom");
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.point < b.point; });
    std::vector<Atom> merged;
    for (const Atom& atom : atoms) {
        if (atom.point < 0) throw std::invalid_argument("atom index must be non-negative");
        if (atom.weight < 0.0) throw std::invalid_argument("atom weight must be non-negative");
        if (!merged.empty() && merged.back().point == atom.point)
            merged.back().weight += atom.weight;
        else
            merged.push_back(atom);
    }
    std::erase_if(merged, [](const Atom& a) { return a.weight < kPruneTol; });
    if (merged.empty()) throw std::invalid_argument("measure has no mass");
    double total = 0.0;
    for (const Atom& atom : merged) total += atom.weight;
    if (std::abs(total - 1.0) > kMassTol)
        throw std::invalid_argument("measure weights must sum to 1");
    if (total != 1.0)
        for (Atom& atom : merged) atom.weight /= total;
    DiscreteMeasure m;
    m.atoms_ = std::move(merged);
    return m;
}

double DiscreteMeasure::weight_at(int point) const {
    const auto it = std::lower_bound(atoms_.begin(), atoms_.end(), point,
                                     [](const Atom& a, int p) { return a.point < p; });
    return (it != atoms_.end() && it->point == point) ? it->weight : 0.0;
}

Subset DiscreteMeasure::support() const {
    std::vector<int> idx;
    idx.reserve(atoms_.size());
    for (const Atom& atom : atoms_) idx.push_back(atom.point);
    return Subset::from_sorted(std::move(idx));
}

DiscreteMeasure dirac(int point) { return DiscreteMeasure::from_atoms({{point, 1.0}}); }

DiscreteMeasure convex_combination(double t, const DiscreteMeasure& mu,
                                   const DiscreteMeasure& nu) {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("interpolation parameter outside [0,1]");
    if (mu == nu) return mu;  // keeps constant paths exactly constant
    std::vector<DiscreteMeasure::Atom> atoms;
    atoms.reserve(mu.atoms().size() + nu.atoms().size());
    for (const auto& atom : mu.atoms()) atoms.push_back({atom.point, (1.0 - t) * atom.weight});
    for (const auto& atom : nu.atoms()) atoms.push_back({atom.point, t * atom.weight});
    return DiscreteMeasure::from_atoms(std::move(atoms));
}

bool approx_equal(const DiscreteMeasure& a, const DiscreteMeasure& b, double tol) {
    for (const auto& atom : a.atoms())
        if (std::abs(atom.weight - b.weight_at(atom.point)) > tol) return false;
    for (const auto& atom : b.atoms())
        if (std::abs(atom.weight - a.weight_at(atom.point)) > tol) return false;
    return true;
}

namespace {

constexpr double kReducedCostTol = 1e-12;

struct SimplexState {
    int m, n;
    std::vector<double> cost;   // m x n
    std::vector<double> flow;   // m x n
    std::vector<char> basic;    // m x n

    double& flow_at(int i, int j) { return flow[static_cast<std::size_t>(i) * n + j]; }
    double cost_at(int i, int j) const { return cost[static_cast<std::size_t>(i) * n + j]; }
    bool is_basic(int i, int j) const { return basic[static_cast<std::size_t>(i) * n + j] != 0; }
};

// Northwest-corner start: walks from (0,0) to (m-1,n-1) one step at a time,
// which marks exactly m+n-1 cells basic (some possibly with zero flow).
void northwest_corner(SimplexState& s, std::vector<double> supply, std::vector<double> demand) {
    int i = 0, j = 0;
    while (true) {
        const double t = std::min(supply[static_cast<std::size_t>(i)], demand[static_cast<std::size_t>(j)]);
        s.flow_at(i, j) = t;
        s.basic[static_cast<std::size_t>(i) * s.n + j] = 1;
        supply[static_cast<std::size_t>(i)] -= t;
        demand[static_cast<std::size_t>(j)] -= t;
        if (i == s.m - 1 && j == s.n - 1) break;
        if (supply[static_cast<std::size_t>(i)] == 0.0 && i < s.m - 1)
            ++i;
        else
            ++j;
    }
}

// Duals from the basis tree: u_i + v_j = c_ij on basic cells, u_0 = 0.
void solve_duals(const SimplexState& s, std::vector<double>& u, std::vector<double>& v) {
    u.assign(static_cast<std::size_t>(s.m), 0.0);
    v.assign(static_cast<std::size_t>(s.n), 0.0);
    std::vector<char> row_done(static_cast<std::size_t>(s.m), 0), col_done(static_cast<std::size_t>(s.n), 0);
    std::queue<int> queue;  // rows are 0..m-1, cols are m..m+n-1
    row_done[0] = 1;
    queue.push(0);
    while (!queue.empty()) {
        const int node = queue.front();
        queue.pop();
        if (node < s.m) {
            for (int j = 0; j < s.n; ++j)
                if (s.is_basic(node, j) && !col_done[static_cast<std::size_t>(j)]) {
                    v[static_cast<std::size_t>(j)] = s.cost_at(node, j) - u[static_cast<std::size_t>(node)];
                    col_done[static_cast<std::size_t>(j)] = 1;
                    queue.push(s.m + j);
                }
        } else {
            const int j = node - s.m;
            for (int i = 0; i < s.m; ++i)
                if (s.is_basic(i, j) && !row_done[static_cast<std::size_t>(i)]) {
                    u[static_cast<std::size_t>(i)] = s.cost_at(i, j) - v[static_cast<std::size_t>(j)];
                    row_done[static_cast<std::size_t>(i)] = 1;
                    queue.push(i);
                }
        }
    }
}

// Unique alternating cycle closed by the entering cell: a path in the basis
// tree from row ei to column ej, reconstructed from BFS parents.
std::vector<std::pair<int, int>> basis_cycle(const SimplexState& s, int ei, int ej) {
    const int nodes = s.m + s.n;
    std::vector<int> parent(static_cast<std::size_t>(nodes), -2);
    std::queue<int> queue;
    parent[static_cast<std::size_t>(ei)] = -1;
    queue.push(ei);
    const int target = s.m + ej;
    while (!queue.empty() && parent[static_cast<std::size_t>(target)] == -2) {
        const int node = queue.front();
        queue.pop();
        if (node < s.m) {
            for (int j = 0; j < s.n; ++j)
                if (s.is_basic(node, j) && parent[static_cast<std::size_t>(s.m + j)] == -2) {
                    parent[static_cast<std::size_t>(s.m + j)] = node;
                    queue.push(s.m + j);
                }
        } else {
            const int j = node - s.m;
            for (int i = 0; i < s.m; ++i)
                if (s.is_basic(i, j) && parent[static_cast<std::size_t>(i)] == -2) {
                    parent[static_cast<std::size_t>(i)] = s.m + j;
                    queue.push(i);
                }
        }
    }
    std::vector<std::pair<int, int>> path;  // cells from the ej end back to ei
    int node = target;
    while (parent[static_cast<std::size_t>(node)] >= 0) {
        const int prev = parent[static_cast<std::size_t>(node)];
        if (node >= s.m)
            path.emplace_back(prev, node - s.m);
        else
            path.emplace_back(node, prev - s.m);
        node = prev;
    }
    return path;
}

}  // namespace

TransportPlan wasserstein(const FiniteMetricSpace& space, const DiscreteMeasure& mu,
                          const DiscreteMeasure& nu, double q) {
    if (q < 1.0) throw std::invalid_argument("q must be >= 1");
    SimplexState s;
    s.m = mu.size();
    s.n = nu.size();
    for (const auto& atom : mu.atoms())
        if (atom.point >= space.size()) throw std::invalid_argument("atom outside space");
    for (const auto& atom : nu.atoms())
        if (atom.point >= space.size()) throw std::invalid_argument("atom outside space");

    s.cost.resize(static_cast<std::size_t>(s.m) * s.n);
    for (int i = 0; i < s.m; ++i)
        for (int j = 0; j < s.n; ++j) {
            const double d = space.dist(mu.atoms()[static_cast<std::size_t>(i)].point,
                                        nu.atoms()[static_cast<std::size_t>(j)].point);
            s.cost[static_cast<std::size_t>(i) * s.n + j] = (q == 1.0) ? d : std::pow(d, q);
        }
    s.flow.assign(static_cast<std::size_t>(s.m) * s.n, 0.0);
    s.basic.assign(static_cast<std::size_t>(s.m) * s.n, 0);

    std::vector<double> supply, demand;
    for (const auto& atom : mu.atoms()) supply.push_back(atom.weight);
    for (const auto& atom : nu.atoms()) demand.push_back(atom.weight);
    northwest_corner(s, supply, demand);

    std::vector<double> u, v;
    while (true) {
        solve_duals(s, u, v);
        // Bland's rule: first improving cell in row-major order
        int ei = -1, ej = -1;
        for (int i = 0; i < s.m && ei < 0; ++i)
            for (int j = 0; j < s.n; ++j) {
                if (s.is_basic(i, j)) continue;
                if (s.cost_at(i, j) - u[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)] <
                    -kReducedCostTol) {
                    ei = i;
                    ej = j;
                    break;
                }
            }
        if (ei < 0) break;

        const auto path = basis_cycle(s, ei, ej);
        // entering cell is +; walking the path from the ej end alternates -,+,...
        double theta = std::numeric_limits<double>::infinity();
        std::pair<int, int> leaving{-1, -1};
        for (std::size_t k = 0; k < path.size(); k += 2) {
            const auto [i, j] = path[k];
            const double f = s.flow_at(i, j);
            if (f < theta || (f == theta && std::make_pair(i, j) < leaving)) {
                theta = f;
                leaving = {i, j};
            }
        }
        s.flow_at(ei, ej) += theta;
        for (std::size_t k = 0; k < path.size(); ++k) {
            const auto [i, j] = path[k];
            if (k % 2 == 0)
                s.flow_at(i, j) -= theta;
            else
                s.flow_at(i, j) += theta;
        }
        s.flow_at(leaving.first, leaving.second) = 0.0;
        s.basic[static_cast<std::size_t>(leaving.first) * s.n + leaving.second] = 0;
        s.basic[static_cast<std::size_t>(ei) * s.n + ej] = 1;
    }

    double total = 0.0;
    for (int i = 0; i < s.m; ++i)
        for (int j = 0; j < s.n; ++j) total += s.flow_at(i, j) * s.cost_at(i, j);
    if (total < 0.0) total = 0.0;

    TransportPlan plan;
    plan.distance = (q == 1.0) ? total : std::pow(total, 1.0 / q);
    for (const auto& atom : mu.atoms()) {
        plan.coupling.row_points.push_back(atom.point);
        plan.coupling.row_weights.push_back(atom.weight);
    }
    for (const auto& atom : nu.atoms()) {
        plan.coupling.col_points.push_back(atom.point);
        plan.coupling.col_weights.push_back(atom.weight);
    }
    plan.coupling.flow = std::move(s.flow);
    return plan;
}

double coupling_cost(const FiniteMetricSpace& space, const Coupling& coupling, double q) {
    if (q < 1.0) throw std::invalid_argument("q must be >= 1");
    const int m = static_cast<int>(coupling.row_points.size());
    const int n = static_cast<int>(coupling.col_points.size());
    if (coupling.flow.size() != static_cast<std::size_t>(m) * n)
        throw std::invalid_argument("coupling shape mismatch");
    for (int i = 0; i < m; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += coupling.entry(i, j);
        if (std::abs(row - coupling.row_weights[static_cast<std::size_t>(i)]) > 1e-9)
            throw std::invalid_argument("coupling violates first marginal");
    }
    for (int j = 0; j < n; ++j) {
        double col = 0.0;
        for (int i = 0; i < m; ++i) col += coupling.entry(i, j);
        if (std::abs(col - coupling.col_weights[static_cast<std::size_t>(j)]) > 1e-9)
            throw std::invalid_argument("coupling violates second marginal");
    }
    double total = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const double d = space.dist(coupling.row_points[static_cast<std::size_t>(i)],
                                        coupling.col_points[static_cast<std::size_t>(j)]);
            total += coupling.entry(i, j) * ((q == 1.0) ? d : std::pow(d, q));
        }
    return (q == 1.0) ? total : std::pow(total, 1.0 / q);
}

double measure_of_set(const DiscreteMeasure& mu, const Subset& s) {
    double total = 0.0;
    for (const auto& atom : mu.atoms())
        if (s.contains(atom.point)) total += atom.weight;
    return total;
}

double integrate(const DiscreteMeasure& mu, const std::function<double(int)>& f) {
    double total = 0.0;
    for (const auto& atom : mu.atoms()) total += atom.weight * f(atom.point);
    return total;
}

}  // namespace vietlab
