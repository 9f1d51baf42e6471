#pragma once

#include "pascalrank/exact_matrix.hpp"
#include "pascalrank/selection.hpp"
#include "pascalrank/subpair.hpp"

#include <cstddef>

namespace pascalrank {

/// Rank certificate for a Pascal submatrix T[r, c]: the rank equals the
/// length of a maximal ordered sub-pair, whose selections double as row
/// and column bases, and whose core submatrix is invertible.
struct RankReport {
    std::size_t rank = 0;
    SubPairIndices pair;
    Selection row_basis;  // rows spanning the row space via T[row_basis, c]
    Selection col_basis;  // columns spanning the column space via T[r, col_basis]
    ExactMatrix core;     // T[row_basis, col_basis], invertible when rank > 0

    bool operator==(const RankReport&) const = default;
};

/// Rank, bases and invertible core of T[r, c], from the greedy maximal
/// sub-pair. Everything is empty at rank 0 (the all-zero submatrix).
RankReport rank_report(const Selection& r, const Selection& c);

/// Square-case invertibility: T[r, c] with len(r) == len(c) is invertible
/// iff r[i] <= c[i] for all i (equivalently, no zero diagonal entry).
/// Throws std::invalid_argument when the lengths differ.
bool is_invertible(const Selection& r, const Selection& c);

} // namespace pascalrank
