#include "pascalrank/lacunary.hpp"

#include "pascalrank/elimination.hpp"
#include "pascalrank/pascal.hpp"
#include "pascalrank/subpair.hpp"

#include <numeric>
#include <stdexcept>

namespace pascalrank {

namespace {

void check_data_length(const Selection& r, const std::vector<Rational>& y) {
    if (y.size() != r.size()) {
        throw std::invalid_argument("data length " + std::to_string(y.size()) +
                                    " does not match row selection length " +
                                    std::to_string(r.size()));
    }
}

LacunaryFit fit_against(const Selection& r, const Selection& degrees,
                        const std::vector<Rational>& y) {
    LacunaryFit out;
    out.degrees = degrees;
    out.design = pascal_submatrix(r, degrees);

    // Clear denominators so the normal equations stay over the integers:
    // with y = z / d, solve (A^T A) u = A^T z and scale back by 1/d.
    Integer denom = 1;
    for (const Rational& v : y) {
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), v.get_den().get_mpz_t());
    }
    std::vector<Integer> scaled(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        scaled[i] = y[i].get_num() * (denom / y[i].get_den());
    }

    ExactMatrix at = out.design.transposed();
    std::vector<Rational> u = solve_linear_system(at * out.design, multiply(at, scaled));
    out.coefficients.resize(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
        out.coefficients[j] = u[j] / Rational(denom);
    }

    std::vector<Rational> residual = multiply(out.design, out.coefficients);
    for (std::size_t i = 0; i < y.size(); ++i) {
        residual[i] -= y[i];
        out.residual_sq += residual[i] * residual[i];
    }
    return out;
}

} // namespace

LacunaryFit fit(const Selection& r, const Selection& c, const std::vector<Rational>& y) {
    check_data_length(r, y);
    SubPairIndices pair = maximal_subpair(r, c);
    if (pair.empty()) {
        throw std::domain_error(
            "no ordered sub-pair exists (empty selection or r[0] > c[last]): "
            "the submatrix is zero and admits no model");
    }
    return fit_against(r, c.at_positions(pair.beta), y);
}

LacunaryFit fit_with_degrees(const Selection& r, const Selection& c, const Selection& degrees,
                             const std::vector<Rational>& y) {
    check_data_length(r, y);
    if (degrees.empty()) {
        throw std::domain_error("degree sequence is empty: no model to fit");
    }
    // An ordered sub-pair using these columns exists iff one exists with
    // the first len(degrees) rows, since r is increasing.
    if (degrees.size() > r.size()) {
        throw std::invalid_argument("degree sequence longer than row selection");
    }
    std::vector<std::size_t> prefix(degrees.size());
    std::iota(prefix.begin(), prefix.end(), 0);
    if (!is_ordered_subpair(r.at_positions(prefix), degrees, r, c)) {
        throw std::invalid_argument("degrees " + degrees.to_string() +
                                    " do not form an ordered sub-pair of the selections");
    }
    return fit_against(r, degrees, y);
}

Rational derivative_at_one(const LacunaryFit& fitted, std::uint64_t order) {
    Rational sum;
    for (std::size_t j = 0; j < fitted.coefficients.size(); ++j) {
        sum += fitted.coefficients[j] * Rational(falling_factorial(fitted.degrees[j], order));
    }
    return sum;
}

std::vector<Rational> residual_vector(const LacunaryFit& fitted, const std::vector<Rational>& y) {
    if (y.size() != fitted.design.rows()) {
        throw std::invalid_argument("data length " + std::to_string(y.size()) +
                                    " does not match design rows " +
                                    std::to_string(fitted.design.rows()));
    }
    std::vector<Rational> residual = multiply(fitted.design, fitted.coefficients);
    for (std::size_t i = 0; i < y.size(); ++i) {
        residual[i] -= y[i];
    }
    return residual;
}

std::string polynomial_string(const LacunaryFit& fitted, unsigned places) {
    std::string out;
    for (std::size_t j = 0; j < fitted.coefficients.size(); ++j) {
        std::string dec = format_decimal(fitted.coefficients[j], places);
        bool negative = !dec.empty() && dec.front() == '-';
        if (negative) dec.erase(0, 1);
        if (dec.starts_with("0.")) dec.erase(0, 1);
        if (j == 0) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        out += dec;
        std::uint64_t degree = fitted.degrees[j];
        if (degree == 1) {
            out += " x";
        } else if (degree > 1) {
            out += " x^" + std::to_string(degree);
        }
    }
    return out;
}

} // namespace pascalrank
