#include "vietlab/cover.hpp"

#include <algorithm>
#include <stdexcept>

#include "vietlab/miniball.hpp"

namespace vietlab {

Cover::Cover(ExplicitCover c) : v_(std::move(c)) {
    for (const auto& element : std::get<ExplicitCover>(v_).elements)
        if (element.empty()) throw std::invalid_argument("explicit cover element is empty");
}

Cover::Cover(DiameterCover c) : v_(c) {
    if (c.r <= 0.0) throw std::invalid_argument("cover radius must be positive");
}

Cover::Cover(BallCover c) : v_(c) {
    if (c.r <= 0.0) throw std::invalid_argument("cover radius must be positive");
}

Cover::Cover(AmbientBallCover c) : v_(std::move(c)) {
    if (std::get<AmbientBallCover>(v_).r <= 0.0)
        throw std::invalid_argument("cover radius must be positive");
}

const ExplicitCover& Cover::as_explicit() const {
    if (!is_explicit()) throw std::invalid_argument("cover is not explicit");
    return std::get<ExplicitCover>(v_);
}

bool contains_set(const FiniteMetricSpace& space, const Cover& cover, const Subset& s) {
    if (s.empty()) throw std::invalid_argument("containment of empty set is undefined");
    if (s[s.size() - 1] >= space.size()) throw std::invalid_argument("subset index out of range");
    return cover.visit([&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ExplicitCover>) {
            return std::any_of(c.elements.begin(), c.elements.end(),
                               [&](const Subset& w) { return s.is_subset_of(w); });
        } else if constexpr (std::is_same_v<T, DiameterCover>) {
            return diameter(space, s) < c.r;
        } else if constexpr (std::is_same_v<T, BallCover>) {
            for (int x = 0; x < space.size(); ++x) {
                double worst = 0.0;
                for (int p : s) worst = std::max(worst, space.dist(x, p));
                if (worst < c.r) return true;
            }
            return false;
        } else {
            static_assert(std::is_same_v<T, AmbientBallCover>);
            if (c.points.size() != space.size())
                throw std::invalid_argument("ambient embedding size mismatch");
            return minimal_enclosing_ball(c.points, s).radius < c.r;
        }
    });
}

CoverReport validate_cover(const FiniteMetricSpace& space, const Cover& cover) {
    CoverReport report;
    cover.visit([&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ExplicitCover>) {
            report.element_count = static_cast<int>(c.elements.size());
            std::vector<char> hit(static_cast<std::size_t>(space.size()), 0);
            double max_diam = 0.0;
            for (const auto& element : c.elements) {
                max_diam = std::max(max_diam, diameter(space, element));
                for (int p : element) {
                    if (p >= space.size()) throw std::invalid_argument("cover element index out of range");
                    hit[static_cast<std::size_t>(p)] = 1;
                }
            }
            for (int p = 0; p < space.size(); ++p)
                if (!hit[static_cast<std::size_t>(p)]) report.uncovered.push_back(p);
            report.covers = report.uncovered.empty();
            report.uniform_bound = max_diam + 1e-9;  // strict bound above the realized diameters
        } else if constexpr (std::is_same_v<T, DiameterCover>) {
            report.covers = true;  // singletons have diameter 0 < r
            report.uniform_bound = c.r;
        } else if constexpr (std::is_same_v<T, BallCover>) {
            report.covers = true;  // x lies in B(x;r)
            report.uniform_bound = 2.0 * c.r;
        } else {
            static_assert(std::is_same_v<T, AmbientBallCover>);
            report.covers = c.points.size() == space.size();
            report.uniform_bound = 2.0 * c.r;
        }
    });
    return report;
}

}  // namespace vietlab
