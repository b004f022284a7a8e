#include "vietlab/miniball.hpp"

#include <cmath>
#include <stdexcept>

namespace vietlab {
namespace {

constexpr double kTol = 1e-12;

bool ball_contains(const Ball& ball, std::span<const double> p) {
    if (ball.radius < 0.0) return false;
    double sq = 0.0;
    for (std::size_t d = 0; d < p.size(); ++d) {
        const double diff = p[d] - ball.center[d];
        sq += diff * diff;
    }
    return sq <= ball.radius * ball.radius + kTol * (1.0 + ball.radius * ball.radius);
}

// Circumsphere of the support points: the center is q0 + sum_i lambda_i (qi - q0)
// with Gram(v) * lambda = |v_i|^2 / 2, solved in the affine basis so the center
// stays in the support's affine hull (that is what makes the sphere minimal).
// A vanishing pivot signals an affinely dependent support; the ball stays empty.
Ball ball_from_support(const PointCloud& cloud, const std::vector<int>& support) {
    const int dim = cloud.dim();
    Ball ball;
    if (support.empty()) return ball;
    const auto q0 = cloud.point(support[0]);
    const int k = static_cast<int>(support.size()) - 1;
    if (k == 0) {
        ball.center.assign(q0.begin(), q0.end());
        ball.radius = 0.0;
        return ball;
    }
    std::vector<std::vector<double>> v(static_cast<std::size_t>(k),
                                       std::vector<double>(static_cast<std::size_t>(dim)));
    std::vector<std::vector<double>> a(static_cast<std::size_t>(k),
                                       std::vector<double>(static_cast<std::size_t>(k) + 1));
    for (int i = 0; i < k; ++i) {
        const auto qi = cloud.point(support[static_cast<std::size_t>(i) + 1]);
        double norm_sq = 0.0;
        for (int d = 0; d < dim; ++d) {
            const double c = qi[static_cast<std::size_t>(d)] - q0[static_cast<std::size_t>(d)];
            v[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] = c;
            norm_sq += c * c;
        }
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0.5 * norm_sq;
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            double dot = 0.0;
            for (int d = 0; d < dim; ++d)
                dot += v[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] *
                       v[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)];
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = dot;
        }
    for (int col = 0; col < k; ++col) {
        int pivot = col;
        for (int row = col + 1; row < k; ++row)
            if (std::abs(a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]) >
                std::abs(a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)]))
                pivot = row;
        if (std::abs(a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)]) < kTol)
            return Ball{};
        std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(pivot)]);
        for (int row = col + 1; row < k; ++row) {
            const double f = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] /
                             a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (int j = col; j <= k; ++j)
                a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
                    f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        }
    }
    std::vector<double> lambda(static_cast<std::size_t>(k));
    for (int row = k - 1; row >= 0; --row) {
        double sum = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)];
        for (int j = row + 1; j < k; ++j)
            sum -= a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] *
                   lambda[static_cast<std::size_t>(j)];
        lambda[static_cast<std::size_t>(row)] =
            sum / a[static_cast<std::size_t>(row)][static_cast<std::size_t>(row)];
    }
    ball.center.assign(q0.begin(), q0.end());
    double radius_sq = 0.0;
    for (int d = 0; d < dim; ++d) {
        double c = 0.0;
        for (int i = 0; i < k; ++i)
            c += lambda[static_cast<std::size_t>(i)] *
                 v[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)];
        ball.center[static_cast<std::size_t>(d)] += c;
        radius_sq += c * c;
    }
    ball.radius = std::sqrt(radius_sq);
    return ball;
}

Ball welzl(const PointCloud& cloud, std::vector<int>& pts, int limit, std::vector<int>& support) {
    if (limit == 0 || static_cast<int>(support.size()) == cloud.dim() + 1)
        return ball_from_support(cloud, support);
    Ball ball = welzl(cloud, pts, limit - 1, support);
    const int p = pts[static_cast<std::size_t>(limit) - 1];
    if (ball_contains(ball, cloud.point(p))) return ball;
    support.push_back(p);
    ball = welzl(cloud, pts, limit - 1, support);
    support.pop_back();
    // move-to-front keeps hard points near the start of later passes
    for (int i = limit - 1; i > 0; --i)
        pts[static_cast<std::size_t>(i)] = pts[static_cast<std::size_t>(i) - 1];
    pts[0] = p;
    return ball;
}

bool contains_all(const PointCloud& cloud, const std::vector<int>& pts, const Ball& ball) {
    for (int p : pts)
        if (!ball_contains(ball, cloud.point(p))) return false;
    return true;
}

// Exhaustive support search; only reached on affinely degenerate inputs, where
// the Welzl recursion can produce singular circumsphere systems.
Ball brute_force_ball(const PointCloud& cloud, const std::vector<int>& pts) {
    const int n = static_cast<int>(pts.size());
    const int max_support = cloud.dim() + 1;
    Ball best;
    std::vector<int> support;
    auto consider = [&](const std::vector<int>& s) {
        const Ball b = ball_from_support(cloud, s);
        if (b.radius < 0.0) return;
        if (!contains_all(cloud, pts, b)) return;
        if (best.radius < 0.0 || b.radius < best.radius) best = b;
    };
    auto recurse = [&](auto&& self, int start) -> void {
        if (!support.empty()) consider(support);
        if (static_cast<int>(support.size()) == max_support) return;
        for (int i = start; i < n; ++i) {
            support.push_back(pts[static_cast<std::size_t>(i)]);
            self(self, i + 1);
            support.pop_back();
        }
    };
    recurse(recurse, 0);
    return best;
}

}  // namespace

Ball minimal_enclosing_ball(const PointCloud& cloud, const Subset& points) {
    if (points.empty()) throw std::invalid_argument("minimal enclosing ball of empty set");
    // collapse coordinate duplicates so degenerate supports cannot arise from them
    std::vector<int> pts;
    for (int p : points) {
        bool dup = false;
        for (int q : pts) {
            const auto a = cloud.point(p), b = cloud.point(q);
            bool same = true;
            for (int d = 0; d < cloud.dim(); ++d)
                if (a[static_cast<std::size_t>(d)] != b[static_cast<std::size_t>(d)]) {
                    same = false;
                    break;
                }
            if (same) {
                dup = true;
                break;
            }
        }
        if (!dup) pts.push_back(p);
    }
    std::vector<int> order = pts;
    std::vector<int> support;
    Ball ball = welzl(cloud, order, static_cast<int>(order.size()), support);
    if (contains_all(cloud, pts, ball)) return ball;
    if (pts.size() <= 32) {
        const Ball fallback = brute_force_ball(cloud, pts);
        if (fallback.radius >= 0.0) return fallback;
    }
    throw std::runtime_error("minimal enclosing ball: degenerate configuration");
}

}  // namespace vietlab
