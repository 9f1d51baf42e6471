#pragma once

#include "pascalrank/exact_matrix.hpp"
#include "pascalrank/numeric.hpp"
#include "pascalrank/selection.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pascalrank {

/// Exact least-squares fit of a sparse-exponent polynomial
/// f(x) = sum_j coefficients[j] * x^degrees[j] to normalized derivative
/// data at x = 1. The design matrix is T[r, degrees], which always has
/// full column rank, so the normal equations have a unique solution.
struct LacunaryFit {
    Selection degrees;                  // exponent sequence of the model
    std::vector<Rational> coefficients; // exact minimizer of |A b - y|^2
    Rational residual_sq;               // minimized sum of squares
    ExactMatrix design;                 // A = T[r, degrees]

    bool operator==(const LacunaryFit&) const = default;
};

/// Fits against the degree sequence picked by the maximal ordered
/// sub-pair of (r, c). y holds one value per row selection entry.
/// Throws std::invalid_argument on a length mismatch and
/// std::domain_error when no ordered sub-pair exists (empty selections
/// or r[0] > c[last], where the whole submatrix is zero).
LacunaryFit fit(const Selection& r, const Selection& c, const std::vector<Rational>& y);

/// Same fit against a caller-chosen degree sequence, which need not be
/// maximal: degrees must be a subsequence of c forming an ordered
/// sub-pair with a subsequence of r.
LacunaryFit fit_with_degrees(const Selection& r, const Selection& c, const Selection& degrees,
                             const std::vector<Rational>& y);

/// The order-th derivative of the fitted polynomial at x = 1:
/// sum_j b_j * d(d-1)...(d-order+1) over degrees d. Order 0 gives f(1).
Rational derivative_at_one(const LacunaryFit& fitted, std::uint64_t order);

/// A*b - y for the fit's design matrix; its squared norm is residual_sq.
std::vector<Rational> residual_vector(const LacunaryFit& fitted, const std::vector<Rational>& y);

/// Display form, e.g. ".7813 x^4 - .1046 x^9 + .0007 x^15":
/// coefficients rounded half-even to the given places, the leading zero
/// of a bare "0." dropped.
std::string polynomial_string(const LacunaryFit& fitted, unsigned places = 4);

} // namespace pascalrank
