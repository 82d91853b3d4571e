#pragma once

#include "capra/hulls.hpp"
#include "capra/linalg.hpp"

#include <optional>
#include <random>
#include <variant>

namespace capra {

/// cone(generators): union of the open rays through each generator,
/// optionally united with the origin. Generators are nonzero.
struct RayFan {
    PointSet generators;
    bool include_origin = false;
};

/// All conic combinations sum lam_i g_i with lam >= 0 not all zero,
/// optionally united with the origin.
struct ConvexGeneratorCone {
    PointSet generators;
    bool include_origin = false;
};

/// cone(conv(vertices)), optionally united with the origin. Vertices nonzero.
struct PolytopeCone {
    PointSet vertices;
    bool include_origin = false;
};

struct Box {
    VecR lo, hi;
};

/// cone({x : A x = b, x in bounds}) with b != 0, so the slice avoids the
/// origin and the hull never contains it.
struct AffineSliceCone {
    std::vector<VecR> a_rows;  // m x d, row major
    VecR b;                    // length m, nonzero
    std::optional<Box> bounds;
};

class ConeSpec {
public:
    enum class Kind { ray_fan, convex_cone, polytope_cone, affine_slice };

    static ConeSpec ray_fan(PointSet generators, bool include_origin);
    static ConeSpec convex_cone(PointSet generators, bool include_origin, std::size_t dim_hint = 0);
    static ConeSpec polytope_cone(PointSet vertices, bool include_origin);
    static ConeSpec affine_slice(std::vector<VecR> a_rows, VecR b, std::optional<Box> bounds);

    Kind kind() const;
    std::size_t dim() const { return dim_; }
    Mode mode() const { return mode_; }

    const RayFan& as_ray_fan() const { return std::get<RayFan>(v_); }
    const ConvexGeneratorCone& as_convex_cone() const { return std::get<ConvexGeneratorCone>(v_); }
    const PolytopeCone& as_polytope_cone() const { return std::get<PolytopeCone>(v_); }
    const AffineSliceCone& as_affine_slice() const { return std::get<AffineSliceCone>(v_); }

    /// Generating points for hull-based reasoning (fan generators, cone
    /// generators, polytope vertices). Empty for affine slices.
    const PointSet& generating_points() const;

private:
    std::variant<RayFan, ConvexGeneratorCone, PolytopeCone, AffineSliceCone> v_;
    std::size_t dim_ = 0;
    Mode mode_ = Mode::exact;

    template <class T>
    ConeSpec(T val, std::size_t d, Mode m) : v_(std::move(val)), dim_(d), mode_(m) {}
};

/// Canonical representative of the ray through v: v / ||v||_inf (exact).
VecR ray_canonical(const VecR& v);

/// Distinct ray representatives of a set of nonzero points.
std::vector<VecR> dedup_rays(const PointSet& pts);

/// Exact membership (float-mode input is exactified losslessly).
bool contains(const ConeSpec& K, const Vector& x);

/// Whether 0 is in K, decided from the representation.
bool origin_status(const ConeSpec& K);

/// Whether K united with {0} is topologically closed.
bool union_origin_closed(const ConeSpec& K);

bool is_convex(const ConeSpec& K);

/// K arbitrary convex cone: whether K meets -K only at the origin.
/// Throws InvalidInputError for non-convex variants.
bool is_pointed(const ConeSpec& K);

/// Float membership with tolerance, used by the sampling oracle and the
/// sphere-restricted minimizer.
bool contains_d(const ConeSpec& K, const VecD& x, double tol);

/// Random point of K drawn through the representation.
VecD sample_point(const ConeSpec& K, std::mt19937_64& rng);

/// For affine slices: kernel basis of A.
std::vector<VecR> affine_kernel(const AffineSliceCone& K, std::size_t dim);

/// Whether the slice {Ax = b} (within bounds) is empty, exact.
bool affine_slice_empty(const AffineSliceCone& K, std::size_t dim);

/// Extreme points of a bounded 2D slice (segment endpoints or a single
/// point); requires d = 2 and bounds present or trivial kernel.
std::vector<VecR> affine_slice_extremes_2d(const AffineSliceCone& K);

}  // namespace capra
