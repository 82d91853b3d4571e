#pragma once

#include "capra/vector.hpp"

#include <vector>

namespace capra {

/// Rank of an m x d rational matrix, exact (Bareiss fraction-free elimination
/// on the denominator-cleared integer matrix).
std::size_t matrix_rank(const std::vector<VecR>& rows, std::size_t d);

/// Basis of { x : A x = 0 }, exact. Empty when the kernel is trivial.
std::vector<VecR> kernel_basis(const std::vector<VecR>& rows, std::size_t d);

/// One solution of A x = b, if any.
std::optional<VecR> solve_affine(const std::vector<VecR>& rows, const VecR& b, std::size_t d);

}  // namespace capra
