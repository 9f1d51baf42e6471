"""Exact rank, bases and invertible cores of Pascal-matrix submatrices."""

from ._core import (
    binomial,
    derivative_at_one,
    fit,
    fit_with_degrees,
    format_decimal,
    generalized_vandermonde,
    index_matrix,
    is_invertible,
    is_ordered_subpair,
    longest_subpair_length,
    matrix_determinant,
    matrix_rank,
    maximal_subpair,
    polynomial_string,
    rank_report,
    submatrix,
)

__all__ = [
    "binomial",
    "derivative_at_one",
    "fit",
    "fit_with_degrees",
    "format_decimal",
    "generalized_vandermonde",
    "index_matrix",
    "is_invertible",
    "is_ordered_subpair",
    "longest_subpair_length",
    "matrix_determinant",
    "matrix_rank",
    "maximal_subpair",
    "polynomial_string",
    "rank_report",
    "submatrix",
]

__version__ = "0.1.0"
