#include "capra/decision.hpp"

#include <algorithm>

namespace capra {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::capra_convex: return "capra_convex";
        case Verdict::not_capra_convex: return "not_capra_convex";
        default: return "undecided_exact";
    }
}

std::string to_string(Rule r) {
    switch (r) {
        case Rule::closed_convex_cone: return "closed-convex-cone";
        case Rule::pointed_minus_origin: return "pointed-minus-origin";
        case Rule::rotund_corollary: return "rotund-corollary";
        case Rule::exact_2d_theorem: return "exact-2d-theorem";
        case Rule::affine_kernel: return "affine-kernel";
        case Rule::coneX_compact: return "coneX-compact";
        default: return "oracle-only";
    }
}

namespace {

P2 p2_of(const VecR& v) { return {v[0], v[1]}; }
VecR vec_of(const P2& p) { return {p.x, p.y}; }

int angular_half(const P2& u) { return (u.y > 0 || (u.y.is_zero() && u.x > 0)) ? 0 : 1; }

bool ccw_less(const P2& u, const P2& v) {
    int hu = angular_half(u), hv = angular_half(v);
    if (hu != hv) return hu < hv;
    return cross2(u, v) > 0;
}

/// Whether 0 lies in cch(rho(K)); exact for every source norm because the
/// origin-in-hull test is invariant under radial normalization of the
/// generating compact set.
struct CchOrigin {
    bool inside = false;
    OriginHullResult hull_result;  // meaningful for generator-based cones
    bool has_hull_result = false;
};

CchOrigin origin_in_cch(const ConeSpec& K) {
    CchOrigin out;
    if (origin_status(K)) {
        out.inside = true;  // 0 in K implies 0 = rho(0) in rho(K)
        return out;
    }
    switch (K.kind()) {
        case ConeSpec::Kind::ray_fan:
        case ConeSpec::Kind::convex_cone:
        case ConeSpec::Kind::polytope_cone: {
            const PointSet& gens = K.generating_points();
            if (gens.empty()) return out;
            out.hull_result = origin_in_convex_hull(gens);
            out.has_hull_result = true;
            out.inside = out.hull_result.inside;
            return out;
        }
        case ConeSpec::Kind::affine_slice:
            // cch(rho(cone(slice))) meets 0 only when 0 is in conv(slice),
            // and the slice is itself convex with A 0 = 0 != b.
            return out;
    }
    return out;
}

SeparatorCert separator_cert(const PointSet& pts, const OriginHullResult& r) {
    return SeparatorCert{r.certificate.separator.a, r.certificate.separator.b, pts.exactified()};
}

CombinationCert combination_cert(const PointSet& pts, const OriginHullResult& r) {
    return CombinationCert{r.certificate.combination.weights, pts.exactified()};
}

}  // namespace

SectorClass2D classify_sector_2d(const ConeSpec& K) {
    if (K.dim() != 2) throw DimensionMismatchError("classify_sector_2d: d = 2 only");
    SectorClass2D out;

    if (K.kind() == ConeSpec::Kind::ray_fan) {
        out.kind = SectorClass2D::Kind::rays;
        out.rays = dedup_rays(K.as_ray_fan().generators);
        return out;
    }

    if (K.kind() == ConeSpec::Kind::affine_slice) {
        const auto& a = K.as_affine_slice();
        if (!a.bounds && !affine_kernel(a, 2).empty() && !affine_slice_empty(a, 2)) {
            // cone of an unbounded line slice: an open half plane bounded by
            // the kernel directions, which the cone itself never reaches
            VecR k = affine_kernel(a, 2)[0];
            VecR x0 = *solve_affine(a.a_rows, a.b, 2);
            VecR neg{-k[0], -k[1]};
            Rat side = k[0] * x0[1] - k[1] * x0[0];  // cross(k, x0)
            out.kind = SectorClass2D::Kind::open_half_plane;
            if (side > 0) {
                out.lo = k;
                out.hi = neg;
            } else {
                out.lo = neg;
                out.hi = k;
            }
            return out;
        }
        std::vector<VecR> ext = affine_slice_extremes_2d(a);
        if (ext.empty()) return out;
        if (ext.size() == 1 || ray_canonical(ext[0]) == ray_canonical(ext[1])) {
            out.kind = SectorClass2D::Kind::rays;
            out.rays = {ray_canonical(ext[0])};
            return out;
        }
        P2 p = p2_of(ext[0]), q = p2_of(ext[1]);
        if (cross2(p, q) < 0) std::swap(p, q);
        out.kind = SectorClass2D::Kind::pointed;
        out.lo = vec_of(p);
        out.hi = vec_of(q);
        return out;
    }

    // conic hull of the generator rays
    std::vector<VecR> reps = dedup_rays(K.generating_points());
    if (reps.empty()) return out;
    if (reps.size() == 1) {
        out.kind = SectorClass2D::Kind::rays;
        out.rays = std::move(reps);
        return out;
    }
    std::vector<P2> dirs;
    dirs.reserve(reps.size());
    for (const VecR& r : reps) dirs.push_back(p2_of(r));
    if (dirs.size() == 2 && cross2(dirs[0], dirs[1]).is_zero()) {
        // two opposite rays: the hull is the full line, whose sphere trace is
        // just the two antipodal directions
        out.kind = SectorClass2D::Kind::rays;
        out.rays = std::move(reps);
        return out;
    }

    std::sort(dirs.begin(), dirs.end(), ccw_less);
    // the counterclockwise gap from dirs[i] to its successor exceeds pi
    // exactly when their cross product is negative
    std::size_t big_gap = dirs.size();
    std::size_t pi_gap = dirs.size();
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        const P2 &u = dirs[i], &v = dirs[(i + 1) % dirs.size()];
        Rat c = cross2(u, v);
        if (c < 0) big_gap = i;
        else if (c.is_zero() && dot2(u, v) < 0) pi_gap = i;
    }

    if (big_gap == dirs.size() && pi_gap == dirs.size()) {
        out.kind = SectorClass2D::Kind::full_plane;
        return out;
    }
    std::size_t gap = big_gap != dirs.size() ? big_gap : pi_gap;
    out.kind = big_gap != dirs.size() ? SectorClass2D::Kind::pointed : SectorClass2D::Kind::half_plane;
    out.lo = vec_of(dirs[(gap + 1) % dirs.size()]);
    out.hi = vec_of(dirs[gap]);
    return out;
}

SphereSet radial_image_2d(const ConeSpec& K, const SourceNorm& n) {
    if (K.dim() != 2) throw DimensionMismatchError("radial_image_2d: d = 2 only");
    if (!n.polyhedral()) throw NormError("radial_image_2d: polyhedral norms only");

    SectorClass2D cls = classify_sector_2d(K);
    SphereSet s;
    switch (cls.kind) {
        case SectorClass2D::Kind::empty:
            break;
        case SectorClass2D::Kind::rays:
            for (const VecR& r : cls.rays) s.points.push_back(radial_projection_p2(p2_of(r), n));
            break;
        case SectorClass2D::Kind::pointed:
        case SectorClass2D::Kind::half_plane:
            s = sphere_arc(p2_of(cls.lo), p2_of(cls.hi), n);
            break;
        case SectorClass2D::Kind::open_half_plane:
            throw InvalidInputError("radial_image_2d: open half plane has no closed sphere trace");
        case SectorClass2D::Kind::full_plane:
            s = sphere_full(n);
            break;
    }
    s.origin = origin_status(K);
    canonicalize(s);
    return s;
}

TheoremTest2D theorem_test_2d(const ConeSpec& K, const SourceNorm& n) {
    TheoremTest2D t;
    t.radial_image = radial_image_2d(K, n);

    std::vector<P2> hull_input;
    for (const Seg2& g : t.radial_image.segments) {
        hull_input.push_back(g.a);
        hull_input.push_back(g.b);
    }
    for (const P2& p : t.radial_image.points) hull_input.push_back(p);
    if (t.radial_image.origin) hull_input.push_back({Rat(0), Rat(0)});

    t.hull = Polytope2D::hull_of(std::move(hull_input));
    if (t.hull.empty()) {
        t.hull_intersection = SphereSet{};
    } else {
        t.hull_intersection = polytope_sphere_intersection_2d(t.hull, n);
    }

    if (!sphere_set_subset(t.radial_image, t.hull_intersection))
        throw CertificateError("theorem_test_2d: radial image escaped its own hull intersection");
    t.witness = find_excess(t.radial_image, t.hull_intersection);
    t.equal = !t.witness.has_value();
    return t;
}

DecisionReport decide_capra_convex(const ConeSpec& K, const SourceNorm& n) {
    DecisionReport rep;
    rep.norm = n;

    const bool cvx = is_convex(K);
    const bool uoc = union_origin_closed(K);
    const bool og = origin_status(K);

    // (1) closed convex cone containing the origin
    if (cvx && uoc && og) {
        rep.verdict = Verdict::capra_convex;
        rep.rule = Rule::closed_convex_cone;
        rep.conditions = {true, true, true};
        rep.certificate = TrivialCert{"closed convex cone containing the origin"};
        return rep;
    }

    // (2) closed convex pointed cone with the origin removed
    if (cvx && uoc && !og && is_pointed(K)) {
        rep.verdict = Verdict::capra_convex;
        rep.rule = Rule::pointed_minus_origin;
        rep.conditions = {true, true, true};
        const PointSet& gens = K.generating_points();
        if (!gens.empty()) {
            rep.certificate = separator_cert(gens, origin_in_convex_hull(gens));
        } else {
            rep.certificate = TrivialCert{"pointed by representation (affine slice or trivial cone)"};
        }
        return rep;
    }

    // (3) unbounded affine slice with a nontrivial kernel
    if (K.kind() == ConeSpec::Kind::affine_slice) {
        const auto& a = K.as_affine_slice();
        if (!a.bounds && !affine_slice_empty(a, K.dim())) {
            auto ker = affine_kernel(a, K.dim());
            if (!ker.empty()) {
                rep.verdict = Verdict::not_capra_convex;
                rep.rule = Rule::affine_kernel;
                rep.conditions = {true, false, false};
                rep.certificate = KernelWitnessCert{a.a_rows, ker[0]};
                rep.detail = "kernel direction is a limit of normalized slice points on both sides";
                return rep;
            }
        }
    }

    // (4) rotund unit ball: the three conditions are equivalent to the verdict
    if (n.rotund()) {
        CchOrigin cch = origin_in_cch(K);
        bool agree = og == cch.inside;
        rep.rule = Rule::rotund_corollary;
        rep.conditions = {true, uoc, agree};
        if (uoc && agree) {
            rep.verdict = Verdict::capra_convex;
            if (og) {
                rep.certificate = TrivialCert{"origin lies in both K and cch(rho(K))"};
            } else if (cch.has_hull_result) {
                rep.certificate = separator_cert(K.generating_points(), cch.hull_result);
            } else {
                rep.certificate = TrivialCert{"origin in neither K nor cch(rho(K))"};
            }
        } else {
            rep.verdict = Verdict::not_capra_convex;
            if (!agree && cch.has_hull_result && cch.inside) {
                rep.certificate = combination_cert(K.generating_points(), cch.hull_result);
                rep.detail = "convex combination of generators reaches 0 while 0 is outside K";
            } else {
                rep.certificate = TrivialCert{"closedness of K united with the origin fails"};
            }
        }
        return rep;
    }

    // (5) exact 2D characterization for polyhedral norms
    if (n.polyhedral() && K.dim() == 2) {
        TheoremTest2D t = theorem_test_2d(K, n);
        rep.rule = Rule::exact_2d_theorem;
        rep.conditions = {true, uoc, og == t.hull_intersection.origin};
        rep.theorem = t;
        if (t.equal) {
            rep.verdict = Verdict::capra_convex;
            rep.certificate = SetEqualityCert{t.radial_image, t.hull_intersection};
        } else {
            rep.verdict = Verdict::not_capra_convex;
            ExcessWitnessCert w;
            w.origin = t.witness->origin;
            if (t.witness->point) w.point = vec_of(*t.witness->point);
            rep.certificate = w;
            rep.detail = w.origin ? "origin lies in cch(rho(K)) but not in K"
                                  : "sphere point lies in cch(rho(K)) but not in rho(K)";
        }
        return rep;
    }

    // (6) no exact rule applies
    rep.verdict = Verdict::undecided_exact;
    rep.rule = Rule::oracle_only;
    rep.conditions = {true, uoc, og == origin_in_cch(K).inside};
    rep.certificate = TrivialCert{"no exact rule for this norm/dimension; consult the sampling oracle"};
    return rep;
}

DecisionReport decide_conical_hull(const PointSet& X, bool x_is_convex, const SourceNorm& n) {
    if (!X.empty()) {
        OriginHullResult r = origin_in_convex_hull(X);
        if (!r.inside && (n.rotund() || x_is_convex || X.size() <= 1)) {
            DecisionReport rep;
            rep.norm = n;
            rep.verdict = Verdict::capra_convex;
            rep.rule = Rule::coneX_compact;
            rep.conditions = {true, true, true};
            rep.certificate = separator_cert(X, r);
            rep.detail = x_is_convex ? "compact convex generator avoiding 0" : "rotund ball and compact generator avoiding 0";
            return rep;
        }
    }

    // fall through to the cascade on the constructed cone
    std::vector<Vector> nonzero;
    for (const Vector& p : X.points())
        if (!p.is_zero()) nonzero.push_back(p);
    bool include_origin = X.contains_zero();
    ConeSpec K = nonzero.empty()
                     ? ConeSpec::convex_cone(PointSet{}, include_origin, X.dim() ? X.dim() : 1)
                     : (x_is_convex ? ConeSpec::polytope_cone(PointSet::of(std::move(nonzero)), include_origin)
                                    : ConeSpec::ray_fan(PointSet::of(std::move(nonzero)), include_origin));
    DecisionReport rep = decide_capra_convex(K, n);
    rep.detail = rep.detail.empty() ? "decided on cone(X) directly" : rep.detail + "; decided on cone(X) directly";
    return rep;
}

bool is_spherically_convex(const PointSet& polytope_vertices) {
    if (polytope_vertices.empty()) throw InvalidInputError("is_spherically_convex: empty generating polytope");
    // The patch is rho(P) for a polytope P, so its positive hull is the conic
    // hull of the vertices: always convex, and pointed exactly when 0 avoids
    // conv(P).
    return !origin_in_convex_hull(polytope_vertices).inside;
}

SphericalReports spherical_to_capra(const PointSet& polytope_vertices, const SourceNorm& n) {
    if (!is_spherically_convex(polytope_vertices))
        throw InvalidInputError("spherical_to_capra: patch is not spherically convex");
    SphericalReports out{
        decide_capra_convex(ConeSpec::convex_cone(polytope_vertices, true), n),
        decide_capra_convex(ConeSpec::convex_cone(polytope_vertices, false), n),
    };
    return out;
}

SublevelSet sublevel_cone(int t, int d) {
    if (d < 1) throw InvalidInputError("sublevel_cone: d >= 1 required");
    SublevelSet s;
    s.t = t;
    s.d = d;
    if (t < 0) {
        s.empty_set = true;
        return s;
    }

    auto axis_gens = [&](const std::vector<int>& coords) {
        std::vector<Vector> gens;
        for (int j : coords) {
            VecR plus(d, Rat(0)), minus(d, Rat(0));
            plus[j] = 1;
            minus[j] = -1;
            gens.emplace_back(std::move(plus));
            gens.emplace_back(std::move(minus));
        }
        return PointSet::of(std::move(gens));
    };

    if (t == 0) {
        s.blocks.push_back(ConeSpec::convex_cone(PointSet{}, true, d));
        return s;
    }
    if (t >= d) {
        s.whole_space = true;
        std::vector<int> all(d);
        for (int j = 0; j < d; ++j) all[j] = j;
        s.blocks.push_back(ConeSpec::convex_cone(axis_gens(all), true));
        return s;
    }

    // one block per coordinate subset of size t
    std::vector<int> idx(t);
    for (int j = 0; j < t; ++j) idx[j] = j;
    for (;;) {
        s.blocks.push_back(ConeSpec::convex_cone(axis_gens(idx), true));
        int k = t - 1;
        while (k >= 0 && idx[k] == d - t + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
    return s;
}

DecisionReport decide_sublevel(const SublevelSet& s, const SourceNorm& n) {
    if (s.empty_set) {
        ConeSpec empty = ConeSpec::convex_cone(PointSet{}, false, s.d);
        DecisionReport rep = decide_capra_convex(empty, n);
        rep.detail = "empty sublevel set";
        return rep;
    }
    if (s.whole_space || s.t == 0) {
        DecisionReport rep = decide_capra_convex(s.blocks[0], n);
        rep.detail = s.whole_space ? "sublevel set is the whole space" : "sublevel set is the origin";
        return rep;
    }
    if (s.t == 1) {
        // the union of the coordinate axes is itself a ray fan
        std::vector<Vector> gens;
        for (int j = 0; j < s.d; ++j) {
            VecR plus(s.d, Rat(0)), minus(s.d, Rat(0));
            plus[j] = 1;
            minus[j] = -1;
            gens.emplace_back(std::move(plus));
            gens.emplace_back(std::move(minus));
        }
        ConeSpec fan = ConeSpec::ray_fan(PointSet::of(std::move(gens)), true);
        DecisionReport rep = decide_capra_convex(fan, n);
        rep.detail = "union of the coordinate axes";
        return rep;
    }

    DecisionReport rep;
    rep.norm = n;
    if (n.rotund()) {
        // Union of coordinate subspaces: a cone, closed once united with 0,
        // and 0 lies in the set, hence in rho of it, hence in the hull.
        rep.verdict = Verdict::capra_convex;
        rep.rule = Rule::rotund_corollary;
        rep.conditions = {true, true, true};
        rep.certificate = TrivialCert{"finite union of coordinate subspaces containing the origin"};
    } else {
        rep.verdict = Verdict::undecided_exact;
        rep.rule = Rule::oracle_only;
        rep.conditions = {true, true, true};
        rep.certificate = TrivialCert{"subspace unions beyond d = 2 have no exact polyhedral rule here"};
    }
    return rep;
}

namespace {

bool verify_trivial(const DecisionReport& rep, const ConeSpec* K) {
    if (!K) return true;
    switch (rep.rule) {
        case Rule::closed_convex_cone:
            return is_convex(*K) && union_origin_closed(*K) && origin_status(*K);
        case Rule::pointed_minus_origin:
            return is_convex(*K) && union_origin_closed(*K) && !origin_status(*K) && is_pointed(*K);
        case Rule::rotund_corollary:
            if (rep.verdict == Verdict::capra_convex)
                return union_origin_closed(*K) && origin_status(*K) == origin_in_cch(*K).inside;
            return !union_origin_closed(*K) || origin_status(*K) != origin_in_cch(*K).inside;
        default:
            return true;
    }
}

}  // namespace

bool verify_certificate(const DecisionReport& rep, const ConeSpec* K) {
    try {
        if (const auto* c = std::get_if<CombinationCert>(&rep.certificate)) {
            if (c->weights.empty()) return false;
            Rat total(0);
            if (c->points.empty()) return false;
            VecR acc(c->points[0].size(), Rat(0));
            for (const auto& [w, idx] : c->weights) {
                if (w < 0 || idx < 0 || static_cast<std::size_t>(idx) >= c->points.size()) return false;
                total += w;
                for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += w * c->points[idx][k];
            }
            if (total != 1) return false;
            for (const Rat& v : acc)
                if (!v.is_zero()) return false;
            if (K && rep.verdict == Verdict::not_capra_convex && origin_status(*K)) return false;
            return true;
        }
        if (const auto* s = std::get_if<SeparatorCert>(&rep.certificate)) {
            if (!(s->b < 0)) return false;
            for (const VecR& p : s->points)
                if (dot_r(s->a, p) > s->b) return false;
            return true;
        }
        if (const auto* k = std::get_if<KernelWitnessCert>(&rep.certificate)) {
            bool nonzero = false;
            for (const Rat& v : k->witness)
                if (!v.is_zero()) nonzero = true;
            if (!nonzero) return false;
            for (const VecR& row : k->a_rows)
                if (!dot_r(row, k->witness).is_zero()) return false;
            return true;
        }
        if (const auto* w = std::get_if<ExcessWitnessCert>(&rep.certificate)) {
            if (!K) return false;
            if (w->origin) return origin_in_cch(*K).inside && !origin_status(*K);
            if (!w->point) return false;
            TheoremTest2D t = theorem_test_2d(*K, rep.norm);
            P2 p = p2_of(*w->point);
            bool in_rhs = false;
            for (const P2& q : t.hull_intersection.points)
                if (q == p) in_rhs = true;
            for (const Seg2& g : t.hull_intersection.segments) {
                if (cross3(g.a, g.b, p).is_zero()) {
                    Rat t0 = dot2({p.x - g.a.x, p.y - g.a.y}, {g.b.x - g.a.x, g.b.y - g.a.y});
                    Rat len2 = dot2({g.b.x - g.a.x, g.b.y - g.a.y}, {g.b.x - g.a.x, g.b.y - g.a.y});
                    if (t0 >= 0 && t0 <= len2) in_rhs = true;
                }
            }
            if (!in_rhs) return false;
            if (norm_r(*w->point, rep.norm) != 1) return false;
            return !contains(*K, Vector(*w->point));
        }
        if (const auto* e = std::get_if<SetEqualityCert>(&rep.certificate)) {
            if (!K) return false;
            TheoremTest2D t = theorem_test_2d(*K, rep.norm);
            return t.equal && t.radial_image == e->lhs && t.hull_intersection == e->rhs;
        }
        return verify_trivial(rep, K);
    } catch (const Error&) {
        return false;
    }
}

}  // namespace capra
