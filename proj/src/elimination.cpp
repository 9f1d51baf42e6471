#include "pascalrank/elimination.hpp"

#include <cassert>
#include <stdexcept>

namespace pascalrank {

namespace {

struct Echelon {
    std::size_t rank = 0;
    int sign = 1;       // parity of the row swaps performed
    Integer last_pivot; // value of the final pivot, 1 if rank is 0
};

// Fraction-free row reduction (Bareiss). Pivots are the first nonzero
// entry of each column, scanning columns left to right but never past
// pivot_col_limit. After step t every active entry is a (t+1)-minor of
// the row-permuted input, so dividing by the previous pivot (a t-minor)
// is exact.
Echelon eliminate(ExactMatrix& m, std::size_t pivot_col_limit) {
    Echelon result;
    result.last_pivot = 1;
    Integer prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_col_limit && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row) {
            m.swap_rows(piv, row);
            result.sign = -result.sign;
        }
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            for (std::size_t j = col + 1; j < m.cols(); ++j) {
                Integer t = m(row, col) * m(i, j) - m(i, col) * m(row, j);
                assert(mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()));
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, col) = 0;
        }
        prev = m(row, col);
        ++row;
    }
    result.rank = row;
    result.last_pivot = prev;
    return result;
}

} // namespace

std::size_t bareiss_rank(ExactMatrix m) {
    return eliminate(m, m.cols()).rank;
}

Integer bareiss_determinant(ExactMatrix m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant of non-square matrix " +
                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    if (m.rows() == 0) return 1; // empty product
    Echelon e = eliminate(m, m.cols());
    if (e.rank < m.rows()) return 0;
    return e.sign < 0 ? Integer(-e.last_pivot) : e.last_pivot;
}

std::vector<Rational> solve_linear_system(ExactMatrix a, std::vector<Integer> rhs) {
    const std::size_t n = a.rows();
    if (a.cols() != n) {
        throw std::invalid_argument("system matrix is not square: " + std::to_string(n) + "x" +
                                    std::to_string(a.cols()));
    }
    if (rhs.size() != n) {
        throw std::invalid_argument("right-hand side length " + std::to_string(rhs.size()) +
                                    " does not match system size " + std::to_string(n));
    }
    if (n == 0) return {};

    ExactMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = rhs[i];
    }
    Echelon e = eliminate(aug, n);
    if (e.rank < n) {
        throw std::domain_error("singular system matrix");
    }
    // full rank: pivot i sits at (i, i); back-substitute over the rationals
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational sum(aug(i, n));
        for (std::size_t j = i + 1; j < n; ++j) {
            sum -= Rational(aug(i, j)) * x[j];
        }
        x[i] = sum / Rational(aug(i, i));
    }
    return x;
}

} // namespace pascalrank
