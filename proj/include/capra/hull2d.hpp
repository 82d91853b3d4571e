#pragma once

#include "capra/norm.hpp"

#include <optional>
#include <vector>

namespace capra {

/// Exact 2D point.
struct P2 {
    Rat x, y;
    bool operator==(const P2& o) const { return x == o.x && y == o.y; }
};

inline bool lex_less(const P2& a, const P2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

/// Orientation of the turn o -> a -> b: positive is counterclockwise.
inline Rat cross3(const P2& o, const P2& a, const P2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline Rat cross2(const P2& a, const P2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot2(const P2& a, const P2& b) { return a.x * b.x + a.y * b.y; }

/// Convex polytope in R^2 with counterclockwise minimal vertex list.
/// Degenerate cases use one (point) or two (segment) vertices.
class Polytope2D {
public:
    Polytope2D() = default;

    /// Monotone chain over exact rationals; collinear boundary points dropped.
    static Polytope2D hull_of(std::vector<P2> pts);

    static Polytope2D from_ccw(std::vector<P2> vs) {
        Polytope2D p;
        p.vs_ = std::move(vs);
        return p;
    }

    bool empty() const { return vs_.empty(); }
    std::size_t size() const { return vs_.size(); }
    const std::vector<P2>& vertices() const { return vs_; }

    /// Closed membership; degenerate polytopes test collinearity/equality.
    bool contains(const P2& q) const;

private:
    std::vector<P2> vs_;
};

/// Segment with endpoints in canonical (lexicographic) order.
struct Seg2 {
    P2 a, b;
    bool operator==(const Seg2& o) const { return a == o.a && b == o.b; }
};

/// Canonical finite subset of S^(0): isolated points, closed segments along
/// the sphere polygon, and an origin flag. Segments are maximal, points are
/// not covered by segments, everything is lexicographically sorted.
struct SphereSet {
    bool origin = false;
    std::vector<P2> points;
    std::vector<Seg2> segments;

    bool operator==(const SphereSet& o) const {
        return origin == o.origin && points == o.points && segments == o.segments;
    }
};

void canonicalize(SphereSet& s);

/// True when lhs is a subset of rhs (canonical forms).
bool sphere_set_subset(const SphereSet& lhs, const SphereSet& rhs);

struct ExcessWitness {
    bool origin = false;          // the origin itself is the excess
    std::optional<P2> point;      // otherwise a sphere point in rhs but not lhs
};

/// A point of rhs \ lhs, assuming lhs is a subset of rhs and the sets differ.
/// Priority: origin, then segment gaps (scanned from the lexicographically
/// greater end), then isolated points.
std::optional<ExcessWitness> find_excess(const SphereSet& lhs, const SphereSet& rhs);

/// Boundary of the unit ball for p in {1, inf}: diamond or square, CCW.
std::vector<P2> sphere_polygon(const SourceNorm& n);

/// Exact P intersect S for polyhedral spheres, plus the origin flag P ∋ 0.
/// Requires P inside the unit ball.
SphereSet polytope_sphere_intersection_2d(const Polytope2D& P, const SourceNorm& n);

/// The boundary arc swept counterclockwise from direction lo to direction hi
/// (nonzero vectors, sector spanning less than a full turn), as sphere
/// segments. lo == hi yields the single point rho(lo).
SphereSet sphere_arc(const P2& lo, const P2& hi, const SourceNorm& n);

/// The whole sphere polygon boundary as a SphereSet.
SphereSet sphere_full(const SourceNorm& n);

/// rho for exact 2D points under polyhedral norms.
P2 radial_projection_p2(const P2& v, const SourceNorm& n);

}  // namespace capra
