#include "pascalrank/pascal.hpp"

namespace pascalrank {

Integer binomial(std::uint64_t n, std::uint64_t k) {
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k); // yields 0 for k > n
    return result;
}

ExactMatrix pascal_submatrix(const Selection& rows, const Selection& cols) {
    ExactMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out(i, j) = binomial(cols[j], rows[i]);
        }
    }
    return out;
}

ExactMatrix generalized_vandermonde(const Selection& rows, const Selection& cols) {
    ExactMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        // d^r/dx^r of x^c at x = 1 is c(c-1)...(c-r+1); the row is then
        // normalized by r!. The quotient is always an integer.
        Integer norm = factorial(rows[i]);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            Integer derivative = falling_factorial(cols[j], rows[i]);
            Integer q;
            mpz_divexact(q.get_mpz_t(), derivative.get_mpz_t(), norm.get_mpz_t());
            out(i, j) = q;
        }
    }
    return out;
}

} // namespace pascalrank
