#include "capra/conjugacy.hpp"

#include "capra/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace capra {

SampledFunction indicator(std::string name, std::vector<VecD> grid, std::function<bool(const VecD&)> member) {
    return SampledFunction{std::move(name), std::move(grid),
                           [m = std::move(member)](const VecD& x) { return m(x) ? 0.0 : kPlusInf; }};
}

double support_function(const std::vector<VecD>& X, const VecD& y) {
    double best = kMinusInf;
    for (const VecD& x : X) best = std::max(best, dot_d(x, y));
    return best;
}

int l0(const VecD& x, double tau_zero) {
    int c = 0;
    for (double v : x)
        if (std::fabs(v) > tau_zero) ++c;
    return c;
}

int l0_exact(const VecR& x) {
    int c = 0;
    for (const Rat& v : x)
        if (!v.is_zero()) ++c;
    return c;
}

SampledFunction make_l0(std::size_t, std::vector<VecD> grid, double tau_zero) {
    return SampledFunction{"l0", std::move(grid), [tau_zero](const VecD& x) { return double(l0(x, tau_zero)); }};
}

std::vector<VecD> sphere_grid(const SourceNorm& n, std::size_t count, std::size_t d, std::uint64_t seed) {
    std::vector<VecD> out;
    out.reserve(count + 1);
    out.push_back(VecD(d, 0.0));  // S^(0) always carries the origin
    auto pts = sphere_samples(n, count, d, seed);
    out.insert(out.end(), pts.begin(), pts.end());
    return out;
}

std::vector<VecD> box_grid(double R, std::size_t res, std::size_t d) {
    if (res < 2) throw InvalidInputError("box_grid: res >= 2 required");
    std::vector<VecD> out;
    std::vector<std::size_t> idx(d, 0);
    const double step = 2.0 * R / static_cast<double>(res - 1);
    for (;;) {
        VecD p(d);
        for (std::size_t j = 0; j < d; ++j) p[j] = -R + step * static_cast<double>(idx[j]);
        out.push_back(std::move(p));
        std::size_t j = 0;
        while (j < d && ++idx[j] == res) idx[j++] = 0;
        if (j == d) break;
    }
    return out;
}

namespace {

struct PreparedFunction {
    std::vector<VecD> rho;     // rho(x) per grid point with finite value
    std::vector<double> val;   // f(x), finite entries only
    bool has_minus_inf = false;
};

PreparedFunction prepare(const SampledFunction& f, const SourceNorm& n) {
    PreparedFunction p;
    p.rho.reserve(f.grid.size());
    p.val.reserve(f.grid.size());
    for (const VecD& x : f.grid) {
        double v = f.eval(x);
        if (v == kPlusInf) continue;  // outside dom f: no contribution to the sup
        if (v == kMinusInf) {
            p.has_minus_inf = true;
            continue;
        }
        p.rho.push_back(radial_projection_d(x, n));
        p.val.push_back(v);
    }
    return p;
}

}  // namespace

std::vector<double> capra_conjugate(const SampledFunction& f, const std::vector<VecD>& duals, const SourceNorm& n,
                                    bool parallel) {
    PreparedFunction p = prepare(f, n);
    std::vector<double> out(duals.size(), kMinusInf);
    if (p.has_minus_inf) {
        std::fill(out.begin(), out.end(), kPlusInf);
        return out;
    }
    const long nd = static_cast<long>(duals.size());
#pragma omp parallel for schedule(static) if (parallel)
    for (long j = 0; j < nd; ++j) {
        const VecD& y = duals[j];
        double best = kMinusInf;
        for (std::size_t i = 0; i < p.rho.size(); ++i) {
            double t = dot_d(p.rho[i], y) - p.val[i];
            if (t > best) best = t;
        }
        out[j] = best;
    }
    return out;
}

BiconjugateResult capra_biconjugate(const SampledFunction& f, const std::vector<VecD>& primal,
                                    const std::vector<VecD>& duals, const SourceNorm& n, bool parallel) {
    std::vector<double> conj = capra_conjugate(f, duals, n, parallel);

    BiconjugateResult res;
    res.values.assign(primal.size(), kMinusInf);

    double y_norm_max = 0;
    for (const VecD& y : duals) y_norm_max = std::max(y_norm_max, norm_d(y, SourceNorm::l2()));

    PreparedFunction p = prepare(f, n);

    std::vector<double> eps(primal.size(), 0.0);
    const long np = static_cast<long>(primal.size());
#pragma omp parallel for schedule(static) if (parallel)
    for (long i = 0; i < np; ++i) {
        VecD rx = radial_projection_d(primal[i], n);
        double best = kMinusInf;
        for (std::size_t j = 0; j < duals.size(); ++j) {
            if (conj[j] == kPlusInf) continue;                       // term is -inf
            if (conj[j] == kMinusInf) { best = kPlusInf; break; }    // empty domain: +inf
            double t = dot_d(rx, duals[j]) - conj[j];
            if (t > best) best = t;
        }
        res.values[i] = best;

        // Overshoot bound: f^CC(x) <= min over grid s of ||rho x - rho s||_2
        // * max ||y||_2 + f(s), so the slack past f(x) is that minimum minus
        // f(x), floored at zero.
        double fx = f.eval(primal[i]);
        if (fx == kPlusInf || p.rho.empty()) continue;
        double bound = kPlusInf;
        for (std::size_t k = 0; k < p.rho.size(); ++k) {
            double dist2 = 0;
            for (std::size_t c = 0; c < rx.size(); ++c) {
                double dd = rx[c] - p.rho[k][c];
                dist2 += dd * dd;
            }
            bound = std::min(bound, std::sqrt(dist2) * y_norm_max + p.val[k]);
        }
        eps[i] = std::max(0.0, bound - fx);
    }
    for (double e : eps) res.eps_grid = std::max(res.eps_grid, e);
    return res;
}

MinimizeResult minimize_over_cone(const SampledFunction& f, const ConeSpec& K, const SourceNorm& n,
                                  const std::vector<VecD>& sphere_pts, double tol) {
    // zero-homogeneity check on a few nonzero samples
    int checked = 0;
    for (const VecD& s : sphere_pts) {
        bool zero = true;
        for (double v : s)
            if (v != 0.0) zero = false;
        if (zero) continue;
        VecD twice(s);
        for (double& v : twice) v *= 2.0;
        double a = f.eval(s), b = f.eval(twice);
        if (a != b && !(std::isinf(a) && std::isinf(b)) && std::fabs(a - b) > 1e-9)
            throw InvalidInputError("minimize_over_cone: objective is not zero-homogeneous on samples");
        if (++checked >= 16) break;
    }

    MinimizeResult out;
    if (origin_status(K)) {
        out.value = f.eval(VecD(K.dim(), 0.0));
        out.direction = VecD(K.dim(), 0.0);
    }
    bool any_sphere = false;
    for (const VecD& s : sphere_pts) {
        bool zero = true;
        for (double v : s)
            if (v != 0.0) zero = false;
        if (zero) continue;
        if (!contains_d(K, s, tol)) continue;
        any_sphere = true;
        double v = f.eval(s);
        if (v < out.value) {
            out.value = v;
            out.direction = s;
        }
    }
    out.sphere_sample_empty = !any_sphere;
    (void)n;
    return out;
}

}  // namespace capra
