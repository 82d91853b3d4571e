#pragma once

#include "capra/cone.hpp"
#include "capra/norm.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace capra {

inline constexpr double kPlusInf = std::numeric_limits<double>::infinity();
inline constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

/// Extended-real function known on a finite grid plus an evaluation closure.
struct SampledFunction {
    std::string name;
    std::vector<VecD> grid;
    std::function<double(const VecD&)> eval;

    double operator()(const VecD& x) const { return eval(x); }
};

/// 0 on the set, +inf outside.
SampledFunction indicator(std::string name, std::vector<VecD> grid, std::function<bool(const VecD&)> member);

/// max over x in X of <x, y>; -inf for empty X.
double support_function(const std::vector<VecD>& X, const VecD& y);

/// Number of coordinates with |x_j| > tau_zero.
int l0(const VecD& x, double tau_zero = 1e-12);
int l0_exact(const VecR& x);

SampledFunction make_l0(std::size_t d, std::vector<VecD> grid, double tau_zero = 1e-12);

/// Points of S^(0): the origin first, then `count` sphere points.
std::vector<VecD> sphere_grid(const SourceNorm& n, std::size_t count, std::size_t d, std::uint64_t seed = 0);

/// Lattice [-R, R]^d with `res` points per axis (odd res passes through 0).
std::vector<VecD> box_grid(double R, std::size_t res, std::size_t d);

/// f^C(y) = sup over the grid of f of (coupling(x, y) - f(x)); the sup over an
/// empty effective domain is -inf. Serial and OpenMP paths produce identical
/// values (per-point loops share one evaluation order).
std::vector<double> capra_conjugate(const SampledFunction& f, const std::vector<VecD>& duals, const SourceNorm& n,
                                    bool parallel = true);

struct BiconjugateResult {
    std::vector<double> values;  // one per primal point
    double eps_grid = 0;         // discretization slack bound (0 on f's own grid)
};

/// f^CC'(x) = sup over duals of (coupling(x, y) - f^C(y)). The reported
/// eps_grid bounds the possible overshoot beyond f(x) caused by rho(x)
/// falling between inner grid points.
BiconjugateResult capra_biconjugate(const SampledFunction& f, const std::vector<VecD>& primal,
                                    const std::vector<VecD>& duals, const SourceNorm& n, bool parallel = true);

struct MinimizeResult {
    double value = kPlusInf;
    std::optional<VecD> direction;   // attaining sphere direction (or origin)
    bool sphere_sample_empty = false;
};

/// min over S^(0) of f restricted to K: the origin competes only when K holds
/// it. Requires f zero-homogeneous on samples.
MinimizeResult minimize_over_cone(const SampledFunction& f, const ConeSpec& K, const SourceNorm& n,
                                  const std::vector<VecD>& sphere_pts, double tol = 1e-9);

}  // namespace capra
