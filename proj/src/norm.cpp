#include "capra/norm.hpp"

#include <algorithm>
#include <cmath>

namespace capra {

SourceNorm SourceNorm::lp(double p) {
    if (p == 1.0) return l1();
    if (p == 2.0) return l2();
    if (std::isinf(p)) return linf();
    if (!(p > 1.0) || !std::isfinite(p)) throw InvalidInputError("SourceNorm: p must be in [1, inf]");
    return {P::general, p};
}

std::string SourceNorm::name() const {
    switch (kind) {
        case P::one: return "l1";
        case P::two: return "l2";
        case P::inf: return "linf";
        default: break;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "p=%.17g", p_value);
    return buf;
}

double norm_d(const VecD& x, const SourceNorm& n) {
    switch (n.kind) {
        case SourceNorm::P::one: {
            double s = 0;
            for (double v : x) s += std::fabs(v);
            return s;
        }
        case SourceNorm::P::inf: {
            double s = 0;
            for (double v : x) s = std::max(s, std::fabs(v));
            return s;
        }
        case SourceNorm::P::two: {
            double s = 0;
            for (double v : x) s += v * v;
            return std::sqrt(s);
        }
        case SourceNorm::P::general: {
            double s = 0;
            for (double v : x) s += std::pow(std::fabs(v), n.p_value);
            return std::pow(s, 1.0 / n.p_value);
        }
    }
    return 0;
}

Rat norm_r(const VecR& x, const SourceNorm& n) {
    switch (n.kind) {
        case SourceNorm::P::one: {
            Rat s(0);
            for (const Rat& v : x) s += abs(v);
            return s;
        }
        case SourceNorm::P::inf: {
            Rat s(0);
            for (const Rat& v : x) s = std::max(s, Rat(abs(v)));
            return s;
        }
        case SourceNorm::P::two:
            throw NormError("norm: exact Euclidean norm is irrational in general; use norm_squared or the float path");
        default:
            throw NormError("norm: exact mode supports p in {1, inf} only");
    }
}

Rat norm_squared_r(const VecR& x) {
    Rat s(0);
    for (const Rat& v : x) s += v * v;
    return s;
}

Scalar norm(const Vector& x, const SourceNorm& n) {
    if (x.mode() == Mode::exact) return Scalar(norm_r(x.exact_coords(), n));
    return Scalar(norm_d(x.real_coords(), n));
}

Scalar norm_squared(const Vector& x) {
    if (x.mode() == Mode::exact) return Scalar(norm_squared_r(x.exact_coords()));
    double s = 0;
    for (double v : x.real_coords()) s += v * v;
    return Scalar(s);
}

SpherePoint SpherePoint::on_sphere(Vector v, const SourceNorm& n, double tau_norm) {
    if (v.mode() == Mode::exact) {
        bool unit = n.kind == SourceNorm::P::two ? norm_squared_r(v.exact_coords()) == 1
                                                 : norm_r(v.exact_coords(), n) == 1;
        if (!unit) throw InvalidInputError("SpherePoint: exact vector is not on the unit sphere");
    } else {
        double d = norm_d(v.real_coords(), n);
        if (std::fabs(d - 1.0) > tau_norm)
            throw InvalidInputError("SpherePoint: vector norm deviates from 1 beyond tolerance");
    }
    return SpherePoint(std::move(v));
}

VecD radial_projection_d(const VecD& x, const SourceNorm& n) {
    double d = norm_d(x, n);
    if (d == 0.0) return VecD(x.size(), 0.0);
    VecD out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] / d;
    return out;
}

VecR radial_projection_r(const VecR& x, const SourceNorm& n) {
    Rat d = norm_r(x, n);
    if (d.is_zero()) return VecR(x.size(), Rat(0));
    VecR out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] / d;
    return out;
}

SpherePoint radial_projection(const Vector& x, const SourceNorm& n) {
    if (x.is_zero()) return SpherePoint::origin(x.mode(), x.dim());
    if (x.mode() == Mode::exact) {
        if (!n.polyhedral())
            throw NormError("radial_projection: exact mode supports p in {1, inf} only");
        return SpherePoint::on_sphere(Vector(radial_projection_r(x.exact_coords(), n)), n);
    }
    return SpherePoint::on_sphere(Vector(radial_projection_d(x.real_coords(), n)), n, 1e-6);
}

Scalar capra_coupling(const Vector& x, const Vector& y, const SourceNorm& n) {
    check_compatible(x, y);
    if (x.is_zero()) return Scalar::zero(x.mode());
    if (x.mode() == Mode::exact) {
        if (!n.polyhedral())
            throw NormError("capra_coupling: exact mode supports p in {1, inf} only");
        return Scalar(Rat(dot_r(x.exact_coords(), y.exact_coords()) / norm_r(x.exact_coords(), n)));
    }
    return Scalar(capra_coupling_d(x.real_coords(), y.real_coords(), n));
}

double capra_coupling_d(const VecD& x, const VecD& y, const SourceNorm& n) {
    bool zero = true;
    for (double v : x)
        if (v != 0.0) { zero = false; break; }
    if (zero) return 0.0;
    return dot_d(x, y) / norm_d(x, n);
}

}  // namespace capra
