#include "pascalrank/rank.hpp"

#include "pascalrank/pascal.hpp"

#include <stdexcept>

namespace pascalrank {

RankReport rank_report(const Selection& r, const Selection& c) {
    RankReport report;
    report.pair = maximal_subpair(r, c);
    report.rank = report.pair.length();
    report.row_basis = r.at_positions(report.pair.alpha);
    report.col_basis = c.at_positions(report.pair.beta);
    report.core = pascal_submatrix(report.row_basis, report.col_basis);
    return report;
}

bool is_invertible(const Selection& r, const Selection& c) {
    if (r.size() != c.size()) {
        throw std::invalid_argument("invertibility is a square-case test: got " +
                                    std::to_string(r.size()) + " rows and " +
                                    std::to_string(c.size()) + " columns");
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] > c[i]) return false;
    }
    return true;
}

} // namespace pascalrank
