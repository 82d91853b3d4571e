#pragma once

#include "capra/hull2d.hpp"
#include "capra/lp.hpp"
#include "capra/norm.hpp"

#include <utility>
#include <vector>

namespace capra {

/// Finite point collection, one dimension and mode, canonically deduplicated.
class PointSet {
public:
    PointSet() = default;
    static PointSet of(std::vector<Vector> pts);

    bool empty() const { return pts_.empty(); }
    std::size_t size() const { return pts_.size(); }
    std::size_t dim() const { return pts_.empty() ? 0 : pts_[0].dim(); }
    Mode mode() const { return pts_.empty() ? Mode::exact : pts_[0].mode(); }
    const std::vector<Vector>& points() const { return pts_; }
    const Vector& operator[](std::size_t i) const { return pts_[i]; }

    bool contains_zero() const;
    std::vector<VecR> exactified() const;

private:
    std::vector<Vector> pts_;
};

/// Convex-combination weights (weight, point index) with sum 1 reproducing 0.
struct ConvexCombination {
    std::vector<std::pair<Rat, int>> weights;
};

/// Functional with <a, x> <= b on the point set while <a, 0> = 0 > b.
struct Separator {
    VecR a;
    Rat b;
};

struct HullCertificate {
    bool is_combination = false;
    ConvexCombination combination;
    Separator separator;
};

struct OriginHullResult {
    bool inside = false;
    HullCertificate certificate;
};

/// Exact LP feasibility of  0 = sum a_i x_i, sum a_i = 1, a >= 0.
/// Float-mode input is exactified first (lossless); the verdict is exact for
/// the given coordinates.
OriginHullResult origin_in_convex_hull(const PointSet& X);

/// Re-checks a certificate by direct arithmetic.
bool verify_origin_certificate(const PointSet& X, const OriginHullResult& r);

/// Same decision as origin_in_convex_hull, documented contract: for 0 not in X
/// this equals the origin-in-hull test of the radially projected points
/// {rho(x)}, so the exact unnormalized test stands in for the irrational
/// normalized one (substitute b_i = a_i / ||x_i||). Throws if 0 is in X.
OriginHullResult normalized_origin_membership_equivalence(const PointSet& X, const SourceNorm& n);

/// Union of open rays through `directions`, plus the origin when flagged:
/// the symbolic value of a conical or positive hull of a finite set.
struct RaySetDescription {
    PointSet directions;   // nonzero representatives
    bool include_origin = false;
};

/// Minimal counterclockwise hull of a planar point set; for finite sets the
/// convex hull is closed, so this is also the closed convex hull.
Polytope2D convex_hull_2d(const PointSet& X);

/// {lam x : x in X, lam > 0}; contains 0 only when 0 is in X.
RaySetDescription conical_hull(const PointSet& X);

/// conical_hull(X) united with {0}.
RaySetDescription positive_hull(const PointSet& X);

}  // namespace capra
