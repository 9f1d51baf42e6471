#pragma once

#include "pascalrank/exact_matrix.hpp"
#include "pascalrank/numeric.hpp"
#include "pascalrank/selection.hpp"

#include <cstdint>

namespace pascalrank {

/// C(n, k) exactly; 0 when k > n. Total on non-negative inputs.
Integer binomial(std::uint64_t n, std::uint64_t k);

/// The len(rows) x len(cols) submatrix of the upper-triangular Pascal
/// matrix: entry (i, j) = C(cols[j], rows[i]). Empty selections give
/// empty matrices.
ExactMatrix pascal_submatrix(const Selection& rows, const Selection& cols);

/// Entry (i, j) is the rows[i]-th derivative of x^cols[j] at x = 1,
/// divided by rows[i]!. Computed from falling factorials, not through
/// binomial(), so the two construction routes can be checked against
/// each other.
ExactMatrix generalized_vandermonde(const Selection& rows, const Selection& cols);

} // namespace pascalrank
