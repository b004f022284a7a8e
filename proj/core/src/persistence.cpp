#include "vietlab/persistence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace vietlab {

int PersistenceDiagram::alive_through(int dim, double lo, double hi) const {
    if (dim < 0 || dim > max_dim()) return 0;
    int count = 0;
    for (const auto& bar : bars(dim))
        if (bar.birth < lo && bar.death >= hi) ++count;
    return count;
}

namespace {

using Column = std::vector<std::int64_t>;

// symmetric difference of sorted index lists (Z/2 column addition)
void add_column(Column& target, const Column& other, Column& scratch) {
    scratch.clear();
    std::set_symmetric_difference(target.begin(), target.end(), other.begin(), other.end(),
                                  std::back_inserter(scratch));
    target.swap(scratch);
}

}  // namespace

PersistenceDiagram persistence(const Filtration& filtration) {
    filtration.validate();
    const auto& entries = filtration.entries();
    const std::int64_t n = static_cast<std::int64_t>(entries.size());

    std::unordered_map<Subset, std::int64_t, SubsetHash> position;
    position.reserve(entries.size());
    for (std::int64_t k = 0; k < n; ++k) position.emplace(entries[static_cast<std::size_t>(k)].simplex, k);

    std::vector<std::vector<std::int64_t>> by_dim(static_cast<std::size_t>(filtration.max_dim()) + 1);
    for (std::int64_t k = 0; k < n; ++k)
        by_dim[static_cast<std::size_t>(entries[static_cast<std::size_t>(k)].simplex.size() - 1)]
            .push_back(k);

    std::vector<std::int64_t> pivot_of(static_cast<std::size_t>(n), -1);
    std::vector<char> cleared(static_cast<std::size_t>(n), 0);
    std::vector<char> paired(static_cast<std::size_t>(n), 0);
    std::unordered_map<std::int64_t, Column> reduced;  // columns that ended with a pivot

    PersistenceDiagram diagram;
    diagram.r_max = filtration.r_max();
    diagram.dims.resize(static_cast<std::size_t>(filtration.max_dim()) + 1);

    Column column, scratch;
    for (int dim = filtration.max_dim(); dim >= 1; --dim) {
        for (std::int64_t j : by_dim[static_cast<std::size_t>(dim)]) {
            if (cleared[static_cast<std::size_t>(j)]) continue;
            const auto& simplex = entries[static_cast<std::size_t>(j)].simplex;
            column.clear();
            for (int drop = 0; drop < simplex.size(); ++drop)
                column.push_back(position.at(simplex.without(drop)));
            std::sort(column.begin(), column.end());
            while (!column.empty()) {
                const std::int64_t low = column.back();
                const std::int64_t owner = pivot_of[static_cast<std::size_t>(low)];
                if (owner < 0) break;
                add_column(column, reduced.at(owner), scratch);
            }
            if (column.empty()) continue;  // j creates a dim-class; paired or essential later
            const std::int64_t low = column.back();
            pivot_of[static_cast<std::size_t>(low)] = j;
            reduced.emplace(j, column);
            paired[static_cast<std::size_t>(low)] = 1;
            paired[static_cast<std::size_t>(j)] = 1;
            cleared[static_cast<std::size_t>(low)] = 1;  // its own column would reduce to zero
            const double birth = entries[static_cast<std::size_t>(low)].value;
            const double death = entries[static_cast<std::size_t>(j)].value;
            if (birth < death)
                diagram.dims[static_cast<std::size_t>(dim) - 1].push_back({birth, death});
        }
    }

    // unpaired creators are essential; a simplex creates a class when its own
    // column vanishes, which is exactly "not paired as a death"
    for (std::int64_t k = 0; k < n; ++k) {
        if (paired[static_cast<std::size_t>(k)]) continue;
        const auto& entry = entries[static_cast<std::size_t>(k)];
        diagram.dims[static_cast<std::size_t>(entry.simplex.size() - 1)].push_back(
            {entry.value, std::numeric_limits<double>::infinity()});
    }

    for (auto& bars : diagram.dims)
        std::sort(bars.begin(), bars.end(), [](const PersistenceBar& a, const PersistenceBar& b) {
            if (a.birth != b.birth) return a.birth < b.birth;
            return a.death < b.death;
        });
    return diagram;
}

namespace {

// GF(2) column echelon rank with bitset columns over the row index space.
class BinaryRank {
public:
    explicit BinaryRank(std::size_t rows) : words_((rows + 63) / 64) {}

    // reduce the column against the stored pivots; keep it if independent
    void insert(std::vector<std::uint64_t> column) {
        while (true) {
            const int high = highest_bit(column);
            if (high < 0) return;
            const auto it = pivots_.find(high);
            if (it == pivots_.end()) {
                pivots_.emplace(high, std::move(column));
                ++rank_;
                return;
            }
            const auto& other = it->second;
            for (std::size_t w = 0; w < words_; ++w) column[w] ^= other[w];
        }
    }

    int rank() const { return rank_; }
    std::size_t words() const { return words_; }

private:
    static int highest_bit(const std::vector<std::uint64_t>& column) {
        for (std::size_t w = column.size(); w-- > 0;)
            if (column[w]) return static_cast<int>(w) * 64 + 63 - std::countl_zero(column[w]);
        return -1;
    }

    std::size_t words_;
    int rank_ = 0;
    std::unordered_map<int, std::vector<std::uint64_t>> pivots_;
};

}  // namespace

std::vector<int> betti_numbers(const SimplicialComplex& complex, int max_dim) {
    std::vector<int> counts(static_cast<std::size_t>(max_dim) + 2, 0);
    std::vector<int> ranks(static_cast<std::size_t>(max_dim) + 2, 0);

    for (int dim = 0; dim <= max_dim; ++dim)
        if (dim <= complex.max_dim())
            counts[static_cast<std::size_t>(dim)] = static_cast<int>(complex.simplices(dim).size());

    for (int dim = 1; dim <= max_dim + 1; ++dim) {
        if (dim > complex.max_dim()) break;
        const auto& rows = complex.simplices(dim - 1);
        std::unordered_map<Subset, int, SubsetHash> row_index;
        row_index.reserve(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], static_cast<int>(r));
        BinaryRank eliminator(rows.size());
        for (const auto& simplex : complex.simplices(dim)) {
            std::vector<std::uint64_t> column(eliminator.words(), 0);
            for (int drop = 0; drop < simplex.size(); ++drop) {
                const int r = row_index.at(simplex.without(drop));
                column[static_cast<std::size_t>(r) / 64] |= std::uint64_t{1} << (r % 64);
            }
            eliminator.insert(std::move(column));
        }
        ranks[static_cast<std::size_t>(dim)] = eliminator.rank();
    }

    std::vector<int> betti(static_cast<std::size_t>(max_dim) + 1, 0);
    for (int dim = 0; dim <= max_dim; ++dim)
        betti[static_cast<std::size_t>(dim)] = counts[static_cast<std::size_t>(dim)] -
                                               ranks[static_cast<std::size_t>(dim)] -
                                               ranks[static_cast<std::size_t>(dim) + 1];
    return betti;
}

namespace {

struct DiagramPoint {
    double birth;
    double death;
    double diagonal_cost() const { return (death - birth) / 2.0; }
};

double point_distance(const DiagramPoint& a, const DiagramPoint& b) {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

// Kuhn augmenting-path matching on the diagonal-augmented bipartite graph.
class BottleneckFeasibility {
public:
    BottleneckFeasibility(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b)
        : a_(a), b_(b), total_(a.size() + b.size()) {}

    bool feasible(double t) {
        match_left_.assign(total_, -1);
        match_right_.assign(total_, -1);
        for (std::size_t i = 0; i < total_; ++i) {
            if (match_left_[i] >= 0) continue;
            visited_.assign(total_, 0);
            if (!augment(i, t)) return false;
        }
        return true;
    }

private:
    bool edge(std::size_t left, std::size_t right, double t) const {
        const bool left_real = left < a_.size();
        const bool right_real = right < b_.size();
        if (left_real && right_real) return point_distance(a_[left], b_[right]) <= t;
        if (left_real) return a_[left].diagonal_cost() <= t;   // to a diagonal slot
        if (right_real) return b_[right].diagonal_cost() <= t; // from a diagonal slot
        return true;                                           // diagonal to diagonal
    }

    bool augment(std::size_t left, double t) {
        for (std::size_t right = 0; right < total_; ++right) {
            if (visited_[right] || !edge(left, right, t)) continue;
            visited_[right] = 1;
            if (match_right_[right] < 0 ||
                augment(static_cast<std::size_t>(match_right_[right]), t)) {
                match_left_[left] = static_cast<int>(right);
                match_right_[right] = static_cast<int>(left);
                return true;
            }
        }
        return false;
    }

    const std::vector<DiagramPoint>& a_;
    const std::vector<DiagramPoint>& b_;
    std::size_t total_;
    std::vector<int> match_left_, match_right_;
    std::vector<char> visited_;
};

}  // namespace

double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim) {
    std::vector<DiagramPoint> fa, fb;
    std::vector<double> inf_a, inf_b;
    auto split = [](const PersistenceDiagram& diagram, int d, std::vector<DiagramPoint>& finite,
                    std::vector<double>& infinite) {
        if (d < 0 || d > diagram.max_dim()) return;
        for (const auto& bar : diagram.bars(d)) {
            if (bar.essential())
                infinite.push_back(bar.birth);
            else
                finite.push_back({bar.birth, bar.death});
        }
    };
    split(a, dim, fa, inf_a);
    split(b, dim, fb, inf_b);

    if (inf_a.size() != inf_b.size()) return std::numeric_limits<double>::infinity();
    std::sort(inf_a.begin(), inf_a.end());
    std::sort(inf_b.begin(), inf_b.end());
    double essential_part = 0.0;
    for (std::size_t k = 0; k < inf_a.size(); ++k)
        essential_part = std::max(essential_part, std::abs(inf_a[k] - inf_b[k]));

    if (fa.empty() && fb.empty()) return essential_part;

    std::vector<double> candidates{0.0};
    for (const auto& p : fa) candidates.push_back(p.diagonal_cost());
    for (const auto& q : fb) candidates.push_back(q.diagonal_cost());
    for (const auto& p : fa)
        for (const auto& q : fb) candidates.push_back(point_distance(p, q));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    BottleneckFeasibility matcher(fa, fb);
    std::size_t lo = 0, hi = candidates.size() - 1;
    if (!matcher.feasible(candidates[hi]))
        return std::numeric_limits<double>::infinity();  // cannot happen: max candidate always works
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (matcher.feasible(candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return std::max(candidates[lo], essential_part);
}

}  // namespace vietlab
