#pragma once

#include "pascalrank/exact_matrix.hpp"
#include "pascalrank/numeric.hpp"

#include <cstddef>
#include <vector>

namespace pascalrank {

/// Exact rank over the rationals, by fraction-free (Bareiss) row
/// elimination on arbitrary-precision integers. No floating point.
std::size_t bareiss_rank(ExactMatrix m);

/// Exact determinant by fraction-free elimination. The 0x0 determinant is
/// 1. Throws std::invalid_argument for non-square input.
Integer bareiss_determinant(ExactMatrix m);

/// Solves a * x = rhs exactly over the rationals for square integer a.
/// Throws std::invalid_argument on shape mismatch and std::domain_error
/// when a is singular.
std::vector<Rational> solve_linear_system(ExactMatrix a, std::vector<Integer> rhs);

} // namespace pascalrank
