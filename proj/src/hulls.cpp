#include "capra/hulls.hpp"

#include <algorithm>

namespace capra {

PointSet PointSet::of(std::vector<Vector> pts) {
    PointSet s;
    if (pts.empty()) return s;
    Mode m = pts[0].mode();
    std::size_t d = pts[0].dim();
    for (const Vector& p : pts) {
        if (p.mode() != m) throw ModeMismatchError("PointSet: mixed coordinate modes");
        if (p.dim() != d) throw DimensionMismatchError("PointSet: mixed dimensions");
    }
    for (Vector& p : pts) {
        bool dup = false;
        for (const Vector& q : s.pts_)
            if (q == p) { dup = true; break; }
        if (!dup) s.pts_.push_back(std::move(p));
    }
    return s;
}

bool PointSet::contains_zero() const {
    for (const Vector& p : pts_)
        if (p.is_zero()) return true;
    return false;
}

std::vector<VecR> PointSet::exactified() const {
    std::vector<VecR> out;
    out.reserve(pts_.size());
    for (const Vector& p : pts_) out.push_back(p.exactified());
    return out;
}

OriginHullResult origin_in_convex_hull(const PointSet& X) {
    const std::size_t d = X.dim();
    std::vector<VecR> pts = X.exactified();

    // Columns (x_i, 1), rhs (0, .., 0, 1).
    std::vector<std::vector<Rat>> cols;
    cols.reserve(pts.size());
    for (const VecR& p : pts) {
        std::vector<Rat> c(p.begin(), p.end());
        c.emplace_back(1);
        cols.push_back(std::move(c));
    }
    std::vector<Rat> rhs(d + 1, Rat(0));
    rhs[d] = 1;

    auto lp = lp_feasible<Rat>(cols, rhs);
    OriginHullResult res;
    if (lp.feasible) {
        res.inside = true;
        res.certificate.is_combination = true;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (!lp.solution[j].is_zero())
                res.certificate.combination.weights.emplace_back(lp.solution[j], static_cast<int>(j));
    } else {
        // Farkas y: y^T (x_i, 1) <= 0 and y_last > 0; drop the last coordinate.
        res.inside = false;
        res.certificate.separator.a.assign(lp.farkas.begin(), lp.farkas.begin() + d);
        res.certificate.separator.b = -lp.farkas[d];
    }
    if (!verify_origin_certificate(X, res)) throw CertificateError("origin_in_convex_hull: certificate re-check failed");
    return res;
}

bool verify_origin_certificate(const PointSet& X, const OriginHullResult& r) {
    std::vector<VecR> pts = X.exactified();
    const std::size_t d = X.dim();
    if (r.inside != r.certificate.is_combination) return false;
    if (r.certificate.is_combination) {
        Rat total(0);
        VecR acc(d, Rat(0));
        for (const auto& [w, idx] : r.certificate.combination.weights) {
            if (w < 0 || idx < 0 || static_cast<std::size_t>(idx) >= pts.size()) return false;
            total += w;
            for (std::size_t k = 0; k < d; ++k) acc[k] += w * pts[idx][k];
        }
        if (total != 1) return false;
        for (const Rat& v : acc)
            if (!v.is_zero()) return false;
        return true;
    }
    const Separator& s = r.certificate.separator;
    if (s.a.size() != d) return false;
    if (!(s.b < 0)) return false;  // <a, 0> = 0 must exceed b
    for (const VecR& p : pts)
        if (dot_r(s.a, p) > s.b) return false;
    return true;
}

OriginHullResult normalized_origin_membership_equivalence(const PointSet& X, const SourceNorm&) {
    if (X.contains_zero())
        throw InvalidInputError("normalized_origin_membership_equivalence: 0 must not be in X");
    return origin_in_convex_hull(X);
}

Polytope2D convex_hull_2d(const PointSet& X) {
    if (!X.empty() && X.dim() != 2) throw DimensionMismatchError("convex_hull_2d: d = 2 only");
    std::vector<P2> pts;
    pts.reserve(X.size());
    for (const VecR& p : X.exactified()) pts.push_back({p[0], p[1]});
    return Polytope2D::hull_of(std::move(pts));
}

RaySetDescription conical_hull(const PointSet& X) {
    std::vector<Vector> dirs;
    bool zero = false;
    for (const Vector& p : X.points()) {
        if (p.is_zero())
            zero = true;
        else
            dirs.push_back(p);
    }
    return {PointSet::of(std::move(dirs)), zero};
}

RaySetDescription positive_hull(const PointSet& X) {
    RaySetDescription r = conical_hull(X);
    r.include_origin = true;
    return r;
}

}  // namespace capra
