#pragma once

#include "capra/cone.hpp"
#include "capra/hull2d.hpp"

#include <optional>
#include <string>
#include <variant>

namespace capra {

enum class Verdict { capra_convex, not_capra_convex, undecided_exact };

enum class Rule {
    closed_convex_cone,
    pointed_minus_origin,
    rotund_corollary,
    exact_2d_theorem,
    affine_kernel,
    coneX_compact,
    oracle_only,
};

std::string to_string(Verdict v);
std::string to_string(Rule r);

/// The three necessary conditions: K is a cone, K united with {0} is closed,
/// and 0 lies in K exactly when it lies in cch(rho(K)).
struct Conditions {
    bool is_cone = true;  // representation-enforced
    bool union_origin_closed = false;
    bool origin_agreement = false;
};

struct CombinationCert {
    std::vector<std::pair<Rat, int>> weights;
    std::vector<VecR> points;
};
struct SeparatorCert {
    VecR a;
    Rat b;
    std::vector<VecR> points;
};
struct KernelWitnessCert {
    std::vector<VecR> a_rows;
    VecR witness;
};
struct ExcessWitnessCert {
    bool origin = false;            // the excess point is the origin itself
    std::optional<VecR> point;      // otherwise a sphere point
};
struct SetEqualityCert {
    SphereSet lhs, rhs;
};
struct TrivialCert {
    std::string note;
};

using Certificate =
    std::variant<CombinationCert, SeparatorCert, KernelWitnessCert, ExcessWitnessCert, SetEqualityCert, TrivialCert>;

struct TheoremTest2D {
    SphereSet radial_image;        // rho(K)
    SphereSet hull_intersection;   // cch(rho(K)) on S^(0)
    Polytope2D hull;               // cch(rho(K))
    bool equal = false;
    std::optional<ExcessWitness> witness;
};

struct DecisionReport {
    Verdict verdict = Verdict::undecided_exact;
    Rule rule = Rule::oracle_only;
    Conditions conditions;
    Certificate certificate = TrivialCert{};
    SourceNorm norm;
    std::string detail;
    std::optional<TheoremTest2D> theorem;
};

/// Shape of a 2D cone's direction set: a finite union of rays, a pointed
/// sector, a half plane, or the full plane.
struct SectorClass2D {
    enum class Kind { empty, rays, pointed, half_plane, open_half_plane, full_plane };
    Kind kind = Kind::empty;
    std::vector<VecR> rays;  // canonical ray representatives (Kind::rays)
    VecR lo, hi;             // extreme directions, counterclockwise (sectors);
                             // excluded boundary for open_half_plane
};
SectorClass2D classify_sector_2d(const ConeSpec& K);

/// rho(K) for 2D cones under polyhedral norms, exact (float input exactified).
SphereSet radial_image_2d(const ConeSpec& K, const SourceNorm& n);

/// The generic characterization, decided exactly in 2D for p in {1, inf}:
/// rho(K) versus cch(rho(K)) on S^(0). Unsupported for unbounded affine
/// slices (those are settled by the kernel rule).
TheoremTest2D theorem_test_2d(const ConeSpec& K, const SourceNorm& n);

/// Decision cascade; first applicable rule wins:
///  1. closed convex cone containing 0
///  2. closed convex pointed cone avoiding 0
///  3. unbounded affine slice with nontrivial kernel
///  4. rotund-ball equivalence via the three conditions
///  5. exact 2D set comparison for polyhedral norms
///  6. undecided (oracle evidence only)
DecisionReport decide_capra_convex(const ConeSpec& K, const SourceNorm& n);

/// Sufficiency route for cone(X), X compact: 0 outside conv(X) plus a rotund
/// ball or convex X certifies Capra-convexity; otherwise falls through to the
/// cascade on the constructed cone.
DecisionReport decide_conical_hull(const PointSet& X, bool x_is_convex, const SourceNorm& n);

/// Sphere patch rho(P) for a polytope P: spherically convex exactly when its
/// positive hull is convex and pointed.
bool is_spherically_convex(const PointSet& polytope_vertices);

/// Reports for the closed conical hull of a spherically convex patch and,
/// when pointed, for the hull minus the origin.
struct SphericalReports {
    DecisionReport closed_cone;
    std::optional<DecisionReport> minus_origin;
};
SphericalReports spherical_to_capra(const PointSet& polytope_vertices,
                                    const SourceNorm& n = SourceNorm::l2());

/// Sublevel set of the l0 pseudonorm as coordinate-subspace blocks.
struct SublevelSet {
    int t = 0;
    int d = 0;
    bool empty_set = false;     // t < 0
    bool whole_space = false;   // t >= d
    std::vector<ConeSpec> blocks;
};
SublevelSet sublevel_cone(int t, int d);

/// Decision for the l0 sublevel set (a union of coordinate subspaces).
DecisionReport decide_sublevel(const SublevelSet& s, const SourceNorm& n);

/// Re-checks a report's certificate by direct arithmetic against the cone it
/// was issued for (pass nullptr when no cone is in scope, e.g. hull reports).
bool verify_certificate(const DecisionReport& report, const ConeSpec* K);

}  // namespace capra
