#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "vietlab/metric_space.hpp"

namespace vietlab {

/// Explicit family of subsets; elements must be nonempty.
struct ExplicitCover {
    std::vector<Subset> elements;
};

/// All open subsets of diameter < r. On a finite space a subset is contained
/// in such an element exactly when its own diameter is < r, so the membership
/// predicate diam(s) < r is exact.
struct DiameterCover {
    double r;
};

/// All open r-balls centered at points of the space.
struct BallCover {
    double r;
};

/// All open r-balls of an ambient Euclidean space, restricted to the points.
/// `points` embeds the finite space into R^D (row i = coordinates of point i);
/// witness centers range over all of R^D, so containment is decided by the
/// minimal enclosing ball.
struct AmbientBallCover {
    PointCloud points;
    double r;
};

class Cover {
public:
    Cover(ExplicitCover c);
    Cover(DiameterCover c);
    Cover(BallCover c);
    Cover(AmbientBallCover c);

    bool is_explicit() const { return std::holds_alternative<ExplicitCover>(v_); }
    const ExplicitCover& as_explicit() const;

    template <class Visitor>
    decltype(auto) visit(Visitor&& visitor) const {
        return std::visit(std::forward<Visitor>(visitor), v_);
    }

private:
    std::variant<ExplicitCover, DiameterCover, BallCover, AmbientBallCover> v_;
};

/// True iff some cover element contains every index of s. Errors on empty s.
bool contains_set(const FiniteMetricSpace& space, const Cover& cover, const Subset& s);

struct CoverReport {
    bool covers = false;              // every point lies in at least one element
    double uniform_bound = 0.0;       // strict upper bound on element diameters
    std::optional<int> element_count; // explicit covers only
    std::vector<int> uncovered;       // points witnessing a covering failure
    bool valid() const { return covers; }
};

CoverReport validate_cover(const FiniteMetricSpace& space, const Cover& cover);

}  // namespace vietlab
