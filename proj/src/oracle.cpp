#include "capra/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace capra {

std::vector<VecD> sphere_samples(const SourceNorm& n, std::size_t count, std::size_t d, std::uint64_t seed) {
    std::vector<VecD> out;
    out.reserve(count);
    if (d == 2) {
        for (std::size_t k = 0; k < count; ++k) {
            double th = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(count);
            out.push_back(radial_projection_d({std::cos(th), std::sin(th)}, n));
        }
        return out;
    }
    if (d == 3) {
        const double golden = M_PI * (3.0 - std::sqrt(5.0));
        for (std::size_t k = 0; k < count; ++k) {
            double z = 1.0 - 2.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(count);
            double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            double phi = golden * static_cast<double>(k);
            out.push_back(radial_projection_d({r * std::cos(phi), r * std::sin(phi), z}, n));
        }
        return out;
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    while (out.size() < count) {
        VecD v(d);
        double s = 0;
        for (double& c : v) {
            c = g(rng);
            s += c * c;
        }
        if (s < 1e-12) continue;
        out.push_back(radial_projection_d(v, n));
    }
    return out;
}

namespace {

/// Float point-in-convex-polygon with an exact fallback in the boundary band.
bool hull_contains(const Polytope2D& hull, const std::vector<VecD>& hull_d, const VecD& q) {
    const std::size_t m = hull_d.size();
    if (m == 0) return false;
    constexpr double band = 1e-12;
    if (m >= 3) {
        bool boundary = false;
        for (std::size_t i = 0; i < m; ++i) {
            const VecD &a = hull_d[i], &b = hull_d[(i + 1) % m];
            double cr = (b[0] - a[0]) * (q[1] - a[1]) - (b[1] - a[1]) * (q[0] - a[0]);
            if (cr < -band) return false;
            if (cr <= band) boundary = true;
        }
        if (!boundary) return true;
    }
    return hull.contains({rat_from_double(q[0]), rat_from_double(q[1])});
}

}  // namespace

OracleResult sampling_oracle(const ConeSpec& K, const SourceNorm& n, std::size_t samples, double tol,
                             std::uint64_t seed, bool parallel) {
    if (samples < 1) throw InvalidInputError("sampling_oracle: samples >= 1 required");
    if (K.dim() > 4) throw InvalidInputError("sampling_oracle: d <= 4 only");

    OracleResult res;
    res.samples = samples;
    res.tol = tol;
    res.seed = seed;

    const std::size_t d = K.dim();
    std::vector<VecD> grid = sphere_samples(n, samples, d, seed);
    const bool k_has_origin = origin_status(K);

    // Approximate rho(K) by projecting representation samples of K; the cone's
    // own directions land exactly on their rays.
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<VecD> rho_samples;
    for (const Vector& g : K.generating_points().points()) rho_samples.push_back(radial_projection_d(g.realized(), n));
    if (K.kind() != ConeSpec::Kind::ray_fan) {
        // fans project onto their generator directions already; the other
        // variants need interior direction samples to fill out the hull
        std::size_t draws = std::clamp<std::size_t>(samples / 10, 64, 1000);
        for (std::size_t i = 0; i < draws; ++i) {
            VecD x = sample_point(K, rng);
            bool zero = true;
            for (double v : x)
                if (v != 0.0) { zero = false; break; }
            if (!zero) rho_samples.push_back(radial_projection_d(x, n));
        }
    }

    if (d == 2) {
        std::vector<P2> pts;
        pts.reserve(rho_samples.size() + 1);
        for (const VecD& p : rho_samples) pts.push_back({rat_from_double(p[0]), rat_from_double(p[1])});
        if (k_has_origin) pts.push_back({Rat(0), Rat(0)});
        Polytope2D hull = Polytope2D::hull_of(std::move(pts));
        std::vector<VecD> hull_d;
        for (const P2& v : hull.vertices()) hull_d.push_back({rat_to_double(v.x), rat_to_double(v.y)});

        std::vector<char> flagged(grid.size(), 0);
        const long nn = static_cast<long>(grid.size());
#pragma omp parallel for schedule(static) if (parallel)
        for (long i = 0; i < nn; ++i) {
            const VecD& s = grid[i];
            if (!hull_contains(hull, hull_d, s)) continue;
            if (contains_d(K, s, tol)) continue;
            flagged[i] = 1;
        }
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!flagged[i]) continue;
            ++res.flagged;
            if (res.witnesses.size() < 8) res.witnesses.push_back(grid[i]);
        }
        res.origin_excess = !k_has_origin && hull_contains(hull, hull_d, VecD(d, 0.0));
    } else {
        // Hull membership by float LP over the rho samples (with the origin
        // adjoined when K holds it).
        std::vector<std::vector<double>> cols;
        for (const VecD& p : rho_samples) {
            std::vector<double> c(p.begin(), p.end());
            c.push_back(1.0);
            cols.push_back(std::move(c));
        }
        if (k_has_origin) {
            std::vector<double> c(d, 0.0);
            c.push_back(1.0);
            cols.push_back(std::move(c));
        }
        auto in_hull = [&](const VecD& q) {
            std::vector<double> rhs(q.begin(), q.end());
            rhs.push_back(1.0);
            return lp_feasible<double>(cols, rhs, 1e-9).feasible;
        };
        for (const VecD& s : grid) {
            if (!in_hull(s)) continue;
            if (contains_d(K, s, tol)) continue;
            ++res.flagged;
            if (res.witnesses.size() < 8) res.witnesses.push_back(s);
        }
        res.origin_excess = !k_has_origin && in_hull(VecD(d, 0.0));
    }

    res.suggested = (res.flagged > 0 || res.origin_excess) ? Verdict::not_capra_convex : Verdict::capra_convex;
    return res;
}

}  // namespace capra
