#pragma once

#include "pascalrank/exact_matrix.hpp"
#include "pascalrank/selection.hpp"

#include <cstddef>
#include <vector>

namespace pascalrank {

/// Positions of an ordered sub-pair inside a pair of selections (r, c):
/// alpha indexes r, beta indexes c, both strictly increasing and of equal
/// length, with r[alpha[i]] <= c[beta[i]] at every i.
struct SubPairIndices {
    std::vector<std::size_t> alpha;
    std::vector<std::size_t> beta;

    std::size_t length() const { return alpha.size(); }
    bool empty() const { return alpha.empty(); }

    bool operator==(const SubPairIndices&) const = default;
};

/// True iff rhat and chat are equal-length subsequences of r and c with
/// rhat[i] <= chat[i] componentwise. The empty pair always qualifies.
bool is_ordered_subpair(const Selection& rhat, const Selection& chat, const Selection& r,
                        const Selection& c);

/// Greedy first-occurrence computation of a maximal ordered sub-pair's
/// positions. Pairs each r[i] with the earliest unused column at least as
/// large; alpha always comes out as the prefix [0..p]. Returns the empty
/// pair when either selection is empty or r[0] exceeds every column.
SubPairIndices maximal_subpair(const Selection& r, const Selection& c);

/// Length of the longest ordered sub-pair of (r, c), by dynamic
/// programming over row/column prefixes. Reference implementation used to
/// cross-check maximal_subpair; shares no code with it.
std::size_t longest_subpair_length(const Selection& r, const Selection& c);

/// The rows x cols 0/1 matrix with ones exactly at (alpha[i], beta[i]).
/// Throws std::invalid_argument if any position falls outside the shape.
ExactMatrix index_matrix(const SubPairIndices& pair, std::size_t rows, std::size_t cols);

} // namespace pascalrank
