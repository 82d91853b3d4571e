#pragma once

#include "capra/vector.hpp"

#include <optional>

namespace capra {

/// Default float-path tolerances; the CLI can override them per scene.
struct Tolerances {
    double norm = 1e-9;  // sphere membership
    double dot = 1e-9;   // coupling comparisons
    double zero = 1e-12; // l0 thresholding
};

/// An lp norm descriptor. p in {1, inf} supports the exact decision paths;
/// p = 2 supports exact squared-norm comparisons; other p in (1, inf) are
/// float-only.
struct SourceNorm {
    enum class P { one, two, inf, general };

    P kind = P::two;
    double p_value = 2.0;  // meaningful for P::general only

    static SourceNorm l1() { return {P::one, 1.0}; }
    static SourceNorm l2() { return {P::two, 2.0}; }
    static SourceNorm linf() { return {P::inf, 0.0}; }
    static SourceNorm lp(double p);

    /// The unit ball's extreme points fill the whole sphere exactly when 1 < p < inf.
    bool rotund() const { return kind == P::two || kind == P::general; }
    bool polyhedral() const { return kind == P::one || kind == P::inf; }

    std::string name() const;
    bool operator==(const SourceNorm& o) const { return kind == o.kind && (kind != P::general || p_value == o.p_value); }
};

double norm_d(const VecD& x, const SourceNorm& n);

/// Exact norm; defined for p in {1, inf} only.
Rat norm_r(const VecR& x, const SourceNorm& n);

Rat norm_squared_r(const VecR& x);

/// Dual-mode norm. Exact mode requires p in {1, inf}; an exact p = 2 request
/// throws NormError (callers compare squared norms or take the float path).
Scalar norm(const Vector& x, const SourceNorm& n);

/// Exact squared Euclidean norm companion, any mode.
Scalar norm_squared(const Vector& x);

/// Member of S^(0): either a unit vector of the source norm or the origin.
class SpherePoint {
public:
    static SpherePoint origin(Mode m, std::size_t dim) { return SpherePoint(m, dim); }
    static SpherePoint on_sphere(Vector v, const SourceNorm& n, double tau_norm = 1e-9);

    bool is_origin() const { return !dir_.has_value(); }
    const Vector& direction() const {
        if (is_origin()) throw InvalidInputError("SpherePoint: origin has no direction");
        return *dir_;
    }
    Mode mode() const { return mode_; }
    std::size_t dim() const { return dim_; }

    /// Coordinates with the origin materialized as the zero vector.
    VecD realized() const { return is_origin() ? VecD(dim_, 0.0) : dir_->realized(); }

    bool operator==(const SpherePoint& o) const {
        if (is_origin() != o.is_origin()) return false;
        return is_origin() || *dir_ == *o.dir_;
    }

private:
    SpherePoint(Mode m, std::size_t dim) : mode_(m), dim_(dim) {}
    explicit SpherePoint(Vector v) : mode_(v.mode()), dim_(v.dim()), dir_(std::move(v)) {}

    Mode mode_;
    std::size_t dim_;
    std::optional<Vector> dir_;
};

/// rho(x) = x / ||x|| for x != 0, rho(0) = the origin tag. Exact mode requires
/// p in {1, inf}; exact p = 2 throws NormError (the engine never materializes
/// irrational sphere points; origin-in-hull tests are normalization invariant).
SpherePoint radial_projection(const Vector& x, const SourceNorm& n);

VecD radial_projection_d(const VecD& x, const SourceNorm& n);
VecR radial_projection_r(const VecR& x, const SourceNorm& n);

/// <rho(x), y>; equals <x, y>/||x|| for x != 0 and 0 for x = 0.
Scalar capra_coupling(const Vector& x, const Vector& y, const SourceNorm& n);

double capra_coupling_d(const VecD& x, const VecD& y, const SourceNorm& n);

}  // namespace capra
