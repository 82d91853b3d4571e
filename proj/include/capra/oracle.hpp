#pragma once

#include "capra/decision.hpp"

#include <cstdint>

namespace capra {

/// Brute-force verdict evidence: discretize S^(0), approximate rho(K) and
/// cch(rho(K)) membership, and flag sphere points that sit in the hull
/// intersection while staying farther than `tol` from rho(K). Advisory only.
struct OracleResult {
    std::size_t samples = 0;
    double tol = 0;
    std::uint64_t seed = 0;
    bool origin_excess = false;
    std::size_t flagged = 0;
    std::vector<VecD> witnesses;  // up to 8 flagged sphere points
    Verdict suggested = Verdict::undecided_exact;
};

OracleResult sampling_oracle(const ConeSpec& K, const SourceNorm& n, std::size_t samples, double tol,
                             std::uint64_t seed, bool parallel = true);

/// Sphere points of the source norm (origin excluded); d = 2 uses uniform
/// angles, d = 3 a Fibonacci lattice, d >= 4 seeded Gaussian directions,
/// all mapped to the norm's sphere by radial scaling.
std::vector<VecD> sphere_samples(const SourceNorm& n, std::size_t count, std::size_t d, std::uint64_t seed);

}  // namespace capra
