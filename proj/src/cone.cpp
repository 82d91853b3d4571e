#include "capra/cone.hpp"

#include <algorithm>
#include <cmath>

namespace capra {

ConeSpec ConeSpec::ray_fan(PointSet generators, bool include_origin) {
    if (generators.empty()) throw InvalidInputError("ray_fan: at least one generator required");
    if (generators.contains_zero()) throw InvalidInputError("ray_fan: zero generator; origin enters via include_origin");
    std::size_t d = generators.dim();
    Mode m = generators.mode();
    return ConeSpec(RayFan{std::move(generators), include_origin}, d, m);
}

ConeSpec ConeSpec::convex_cone(PointSet generators, bool include_origin, std::size_t dim_hint) {
    std::vector<Vector> nonzero;
    for (const Vector& g : generators.points())
        if (!g.is_zero()) nonzero.push_back(g);
    std::size_t d = nonzero.empty() ? (dim_hint ? dim_hint : generators.dim()) : nonzero[0].dim();
    if (d == 0) throw InvalidInputError("convex_cone: dimension unknown for empty generator set");
    Mode m = nonzero.empty() ? Mode::exact : nonzero[0].mode();
    return ConeSpec(ConvexGeneratorCone{PointSet::of(std::move(nonzero)), include_origin}, d, m);
}

ConeSpec ConeSpec::polytope_cone(PointSet vertices, bool include_origin) {
    if (vertices.empty()) throw InvalidInputError("polytope_cone: at least one vertex required");
    if (vertices.contains_zero()) throw InvalidInputError("polytope_cone: zero vertex; origin enters via include_origin");
    std::size_t d = vertices.dim();
    Mode m = vertices.mode();
    return ConeSpec(PolytopeCone{std::move(vertices), include_origin}, d, m);
}

ConeSpec ConeSpec::affine_slice(std::vector<VecR> a_rows, VecR b, std::optional<Box> bounds) {
    if (a_rows.empty()) throw InvalidInputError("affine_slice: empty matrix");
    std::size_t d = a_rows[0].size();
    for (const VecR& r : a_rows)
        if (r.size() != d) throw DimensionMismatchError("affine_slice: ragged matrix");
    if (b.size() != a_rows.size()) throw DimensionMismatchError("affine_slice: rhs length mismatch");
    bool bz = true;
    for (const Rat& v : b)
        if (!v.is_zero()) { bz = false; break; }
    if (bz) throw InvalidInputError("affine_slice: b = 0 describes a linear subspace; use convex_cone");
    if (bounds) {
        if (bounds->lo.size() != d || bounds->hi.size() != d)
            throw DimensionMismatchError("affine_slice: bounds dimension mismatch");
        for (std::size_t i = 0; i < d; ++i)
            if (bounds->lo[i] > bounds->hi[i]) throw InvalidInputError("affine_slice: empty bounds box");
    }
    return ConeSpec(AffineSliceCone{std::move(a_rows), std::move(b), std::move(bounds)}, d, Mode::exact);
}

ConeSpec::Kind ConeSpec::kind() const {
    if (std::holds_alternative<RayFan>(v_)) return Kind::ray_fan;
    if (std::holds_alternative<ConvexGeneratorCone>(v_)) return Kind::convex_cone;
    if (std::holds_alternative<PolytopeCone>(v_)) return Kind::polytope_cone;
    return Kind::affine_slice;
}

const PointSet& ConeSpec::generating_points() const {
    static const PointSet empty;
    switch (kind()) {
        case Kind::ray_fan: return as_ray_fan().generators;
        case Kind::convex_cone: return as_convex_cone().generators;
        case Kind::polytope_cone: return as_polytope_cone().vertices;
        default: return empty;
    }
}

VecR ray_canonical(const VecR& v) {
    Rat m(0);
    for (const Rat& c : v) m = std::max(m, Rat(abs(c)));
    if (m.is_zero()) throw InvalidInputError("ray_canonical: zero vector has no ray");
    VecR out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / m;
    return out;
}

std::vector<VecR> dedup_rays(const PointSet& pts) {
    std::vector<VecR> reps;
    for (const VecR& p : pts.exactified()) {
        VecR r = ray_canonical(p);
        if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(std::move(r));
    }
    return reps;
}

namespace {

bool conic_member(const PointSet& gens, const VecR& x) {
    if (gens.empty()) return false;
    std::vector<std::vector<Rat>> cols;
    cols.reserve(gens.size());
    for (const VecR& g : gens.exactified()) cols.emplace_back(g.begin(), g.end());
    return lp_feasible<Rat>(cols, std::vector<Rat>(x.begin(), x.end())).feasible;
}

bool vec_is_zero(const VecR& x) {
    for (const Rat& v : x)
        if (!v.is_zero()) return false;
    return true;
}

std::optional<Rat> affine_scale(const AffineSliceCone& a, const VecR& x) {
    // Ax = lam b with lam > 0, then x/lam must satisfy the bounds.
    std::size_t k = 0;
    while (a.b[k].is_zero()) ++k;
    VecR ax(a.b.size());
    for (std::size_t i = 0; i < a.a_rows.size(); ++i) ax[i] = dot_r(a.a_rows[i], x);
    Rat lam = ax[k] / a.b[k];
    if (!(lam > 0)) return std::nullopt;
    for (std::size_t i = 0; i < ax.size(); ++i)
        if (ax[i] != lam * a.b[i]) return std::nullopt;
    return lam;
}

}  // namespace

bool contains(const ConeSpec& K, const Vector& x) {
    if (x.dim() != K.dim()) throw DimensionMismatchError("contains: dimension mismatch");
    VecR xe = x.exactified();
    if (vec_is_zero(xe)) return origin_status(K);

    switch (K.kind()) {
        case ConeSpec::Kind::ray_fan: {
            VecR cx = ray_canonical(xe);
            for (const VecR& r : dedup_rays(K.as_ray_fan().generators))
                if (r == cx) return true;
            return false;
        }
        case ConeSpec::Kind::convex_cone:
            return conic_member(K.as_convex_cone().generators, xe);
        case ConeSpec::Kind::polytope_cone:
            return conic_member(K.as_polytope_cone().vertices, xe);
        case ConeSpec::Kind::affine_slice: {
            const auto& a = K.as_affine_slice();
            auto lam = affine_scale(a, xe);
            if (!lam) return false;
            if (a.bounds) {
                for (std::size_t i = 0; i < xe.size(); ++i) {
                    Rat xi = xe[i] / *lam;
                    if (xi < a.bounds->lo[i] || xi > a.bounds->hi[i]) return false;
                }
            }
            return true;
        }
    }
    return false;
}

bool origin_status(const ConeSpec& K) {
    switch (K.kind()) {
        case ConeSpec::Kind::ray_fan:
            return K.as_ray_fan().include_origin;
        case ConeSpec::Kind::convex_cone: {
            const auto& c = K.as_convex_cone();
            if (c.include_origin) return true;
            return !c.generators.empty() && origin_in_convex_hull(c.generators).inside;
        }
        case ConeSpec::Kind::polytope_cone: {
            const auto& c = K.as_polytope_cone();
            if (c.include_origin) return true;
            return origin_in_convex_hull(c.vertices).inside;
        }
        case ConeSpec::Kind::affine_slice:
            return false;  // A 0 = 0 != b
    }
    return false;
}

bool union_origin_closed(const ConeSpec& K) {
    switch (K.kind()) {
        case ConeSpec::Kind::ray_fan:
        case ConeSpec::Kind::convex_cone:
        case ConeSpec::Kind::polytope_cone:
            // Finite unions of rays and finitely generated convex cones are
            // closed once the origin is adjoined.
            return true;
        case ConeSpec::Kind::affine_slice: {
            const auto& a = K.as_affine_slice();
            if (affine_slice_empty(a, K.dim())) return true;  // cone of nothing is empty
            if (a.bounds) return true;                        // compact slice avoiding 0
            return affine_kernel(a, K.dim()).empty();
        }
    }
    return true;
}

bool is_convex(const ConeSpec& K) {
    switch (K.kind()) {
        case ConeSpec::Kind::ray_fan: {
            const auto& f = K.as_ray_fan();
            std::vector<VecR> reps = dedup_rays(f.generators);
            if (reps.size() <= 1) return true;
            if (reps.size() != 2) return false;
            // two opposite rays form a line exactly when the origin is included
            VecR neg = reps[1];
            for (Rat& v : neg) v = -v;
            return reps[0] == neg && f.include_origin;
        }
        case ConeSpec::Kind::convex_cone:
        case ConeSpec::Kind::polytope_cone:
        case ConeSpec::Kind::affine_slice:
            // Conic hulls of convex sets are convex; the slice is convex.
            return true;
    }
    return true;
}

bool is_pointed(const ConeSpec& K) {
    if (!is_convex(K)) throw InvalidInputError("is_pointed: supported for convex cones only");
    switch (K.kind()) {
        case ConeSpec::Kind::ray_fan:
            return dedup_rays(K.as_ray_fan().generators).size() <= 1;
        case ConeSpec::Kind::convex_cone: {
            const auto& c = K.as_convex_cone();
            if (c.generators.empty()) return true;
            return !origin_in_convex_hull(c.generators).inside;
        }
        case ConeSpec::Kind::polytope_cone:
            return !origin_in_convex_hull(K.as_polytope_cone().vertices).inside;
        case ConeSpec::Kind::affine_slice:
            // x = lam p = -mu q with Ap = Aq = b forces lam b = -mu b, b != 0.
            return true;
    }
    return true;
}

bool contains_d(const ConeSpec& K, const VecD& x, double tol) {
    double amax = 0;
    for (double v : x) amax = std::max(amax, std::fabs(v));
    if (amax <= tol) return origin_status(K);

    switch (K.kind()) {
        case ConeSpec::Kind::ray_fan: {
            SourceNorm n2 = SourceNorm::l2();
            VecD xn = radial_projection_d(x, n2);
            for (const Vector& g : K.as_ray_fan().generators.points()) {
                VecD gn = radial_projection_d(g.realized(), n2);
                double dist = 0;
                for (std::size_t i = 0; i < xn.size(); ++i) dist = std::max(dist, std::fabs(xn[i] - gn[i]));
                if (dist <= tol) return true;
            }
            return false;
        }
        case ConeSpec::Kind::convex_cone:
        case ConeSpec::Kind::polytope_cone: {
            const PointSet& gens = K.generating_points();
            if (K.dim() == 2) {
                // sector test via oriented gaps around the direction
                VecD xn = radial_projection_d(x, SourceNorm::l2());
                bool any_left = false, any_right = false;
                for (const Vector& g : gens.points()) {
                    VecD gn = radial_projection_d(g.realized(), SourceNorm::l2());
                    double cr = gn[0] * xn[1] - gn[1] * xn[0];
                    double dt = gn[0] * xn[0] + gn[1] * xn[1];
                    if (dt >= 1.0 - tol) return true;  // on a generator ray
                    if (cr > 0) any_left = true;
                    if (cr < 0) any_right = true;
                }
                if (!(any_left && any_right)) return false;
                // between two generators: check the conic system exactly
            }
            VecR xe;
            xe.reserve(x.size());
            for (double v : x) xe.push_back(rat_from_double(v));
            return conic_member(gens, xe);
        }
        case ConeSpec::Kind::affine_slice: {
            const auto& a = K.as_affine_slice();
            std::size_t m = a.b.size();
            VecD ax(m, 0.0), bd(m);
            for (std::size_t i = 0; i < m; ++i) {
                bd[i] = rat_to_double(a.b[i]);
                for (std::size_t j = 0; j < x.size(); ++j) ax[i] += rat_to_double(a.a_rows[i][j]) * x[j];
            }
            double bb = dot_d(bd, bd);
            double lam = dot_d(ax, bd) / bb;
            if (lam <= tol) return false;
            for (std::size_t i = 0; i < m; ++i)
                if (std::fabs(ax[i] - lam * bd[i]) > tol * (1 + std::fabs(bd[i]))) return false;
            if (a.bounds) {
                for (std::size_t j = 0; j < x.size(); ++j) {
                    double xj = x[j] / lam;
                    if (xj < rat_to_double(a.bounds->lo[j]) - tol || xj > rat_to_double(a.bounds->hi[j]) + tol)
                        return false;
                }
            }
            return true;
        }
    }
    return false;
}

VecD sample_point(const ConeSpec& K, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_real_distribution<double> scale(0.1, 3.0);
    switch (K.kind()) {
        case ConeSpec::Kind::ray_fan: {
            const auto& f = K.as_ray_fan();
            std::uniform_int_distribution<std::size_t> pick(0, f.generators.size() - 1);
            VecD g = f.generators[pick(rng)].realized();
            double lam = scale(rng);
            for (double& v : g) v *= lam;
            return g;
        }
        case ConeSpec::Kind::convex_cone:
        case ConeSpec::Kind::polytope_cone: {
            const PointSet& gens = K.generating_points();
            VecD out(K.dim(), 0.0);
            if (gens.empty()) return out;
            double total = 0;
            for (const Vector& g : gens.points()) {
                double w = u01(rng);
                total += w;
                VecD gd = g.realized();
                for (std::size_t i = 0; i < out.size(); ++i) out[i] += w * gd[i];
            }
            if (total == 0) return gens[0].realized();
            double lam = scale(rng);
            for (double& v : out) v *= lam;
            return out;
        }
        case ConeSpec::Kind::affine_slice: {
            const auto& a = K.as_affine_slice();
            auto x0 = solve_affine(a.a_rows, a.b, K.dim());
            if (!x0) return VecD(K.dim(), 0.0);
            auto ker = affine_kernel(a, K.dim());
            VecD pt(K.dim());
            for (int attempt = 0; attempt < 64; ++attempt) {
                for (std::size_t i = 0; i < pt.size(); ++i) pt[i] = rat_to_double((*x0)[i]);
                for (const VecR& k : ker) {
                    double t = (u01(rng) - 0.5) * 6.0;
                    for (std::size_t i = 0; i < pt.size(); ++i) pt[i] += t * rat_to_double(k[i]);
                }
                bool ok = true;
                if (a.bounds) {
                    for (std::size_t i = 0; i < pt.size(); ++i)
                        if (pt[i] < rat_to_double(a.bounds->lo[i]) || pt[i] > rat_to_double(a.bounds->hi[i])) {
                            ok = false;
                            break;
                        }
                }
                if (ok) break;
            }
            double lam = scale(rng);
            for (double& v : pt) v *= lam;
            return pt;
        }
    }
    return VecD(K.dim(), 0.0);
}

std::vector<VecR> affine_kernel(const AffineSliceCone& K, std::size_t dim) {
    return kernel_basis(K.a_rows, dim);
}

bool affine_slice_empty(const AffineSliceCone& K, std::size_t dim) {
    auto x0 = solve_affine(K.a_rows, K.b, dim);
    if (!x0) return true;
    if (!K.bounds) return false;

    // Feasibility of Ax = b inside the box: x = lo + u, u + s = hi - lo, u, s >= 0.
    std::size_t m = K.b.size(), d = dim;
    std::vector<std::vector<Rat>> cols;
    auto col = [&](std::size_t) { return std::vector<Rat>(m + d, Rat(0)); };
    for (std::size_t j = 0; j < d; ++j) {  // u_j
        auto c = col(j);
        for (std::size_t i = 0; i < m; ++i) c[i] = K.a_rows[i][j];
        c[m + j] = 1;
        cols.push_back(std::move(c));
    }
    for (std::size_t j = 0; j < d; ++j) {  // s_j
        auto c = col(j);
        c[m + j] = 1;
        cols.push_back(std::move(c));
    }
    std::vector<Rat> rhs(m + d, Rat(0));
    for (std::size_t i = 0; i < m; ++i) rhs[i] = K.b[i] - dot_r(K.a_rows[i], K.bounds->lo);
    for (std::size_t j = 0; j < d; ++j) rhs[m + j] = K.bounds->hi[j] - K.bounds->lo[j];
    return !lp_feasible<Rat>(cols, rhs).feasible;
}

std::vector<VecR> affine_slice_extremes_2d(const AffineSliceCone& K) {
    if (K.a_rows[0].size() != 2) throw DimensionMismatchError("affine_slice_extremes_2d: d = 2 only");
    auto x0 = solve_affine(K.a_rows, K.b, 2);
    if (!x0) return {};
    auto ker = affine_kernel(K, 2);
    if (ker.empty()) {
        if (K.bounds)
            for (std::size_t i = 0; i < 2; ++i)
                if ((*x0)[i] < K.bounds->lo[i] || (*x0)[i] > K.bounds->hi[i]) return {};
        return {*x0};
    }
    if (!K.bounds) throw InvalidInputError("affine_slice_extremes_2d: unbounded slice");

    // Clip x0 + t k to the box.
    const VecR& k = ker[0];
    bool empty = false;
    Rat tlo, thi;
    bool has_lo = false, has_hi = false;
    for (std::size_t i = 0; i < 2 && !empty; ++i) {
        Rat lo = K.bounds->lo[i] - (*x0)[i], hi = K.bounds->hi[i] - (*x0)[i];
        if (k[i].is_zero()) {
            if (lo > 0 || hi < 0) empty = true;
            continue;
        }
        Rat t0 = lo / k[i], t1 = hi / k[i];
        if (t0 > t1) std::swap(t0, t1);
        if (!has_lo || t0 > tlo) { tlo = t0; has_lo = true; }
        if (!has_hi || t1 < thi) { thi = t1; has_hi = true; }
    }
    if (empty || !has_lo || tlo > thi) return {};
    VecR p{(*x0)[0] + tlo * k[0], (*x0)[1] + tlo * k[1]};
    VecR q{(*x0)[0] + thi * k[0], (*x0)[1] + thi * k[1]};
    if (p == q) return {p};
    return {p, q};
}

}  // namespace capra
