#include "pascalrank/elimination.hpp"
#include "pascalrank/lacunary.hpp"
#include "pascalrank/pascal.hpp"
#include "pascalrank/rank.hpp"
#include "pascalrank/subpair.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

namespace py = pybind11;

using namespace pascalrank;

namespace {

py::int_ to_py(const Integer& v) {
    PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::object to_py(const Rational& v) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(Integer(v.get_num())), to_py(Integer(v.get_den())));
}

py::list to_py(const ExactMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.append(to_py(m(i, j)));
        }
        rows.append(std::move(row));
    }
    return rows;
}

py::list to_py(const std::vector<Rational>& values) {
    py::list out;
    for (const Rational& v : values) out.append(to_py(v));
    return out;
}

Integer integer_from_py(py::handle obj) {
    if (!py::isinstance<py::int_>(obj)) {
        throw py::type_error("matrix entries must be Python ints");
    }
    return Integer(py::str(obj).cast<std::string>(), 10);
}

// Exact by construction: ints and Fractions pass through their decimal
// string form, floats are rejected rather than silently re-interpreted.
Rational rational_from_py(py::handle obj) {
    if (py::isinstance<py::float_>(obj)) {
        throw py::type_error(
            "floats are not accepted; pass an int, a fractions.Fraction, or a string "
            "such as '1/3' or '0.25'");
    }
    return parse_rational(py::str(obj).cast<std::string>());
}

std::vector<Rational> data_from_py(const py::sequence& seq) {
    std::vector<Rational> out;
    out.reserve(py::len(seq));
    for (py::handle item : seq) out.push_back(rational_from_py(item));
    return out;
}

Selection selection_from_py(const std::vector<std::uint64_t>& values) {
    return Selection(values);
}

ExactMatrix matrix_from_py(const py::sequence& rows) {
    std::vector<std::vector<Integer>> grid;
    for (py::handle row : rows) {
        auto seq = py::cast<py::sequence>(row);
        std::vector<Integer> entries;
        for (py::handle item : seq) entries.push_back(integer_from_py(item));
        grid.push_back(std::move(entries));
    }
    std::size_t r = grid.size();
    std::size_t c = r == 0 ? 0 : grid.front().size();
    std::vector<Integer> flat;
    flat.reserve(r * c);
    for (const auto& row : grid) {
        if (row.size() != c) throw py::value_error("ragged matrix rows");
        for (const Integer& v : row) flat.push_back(v);
    }
    return ExactMatrix(r, c, std::move(flat));
}

py::dict subpair_to_py(const SubPairIndices& pair) {
    py::dict out;
    out["alpha"] = pair.alpha;
    out["beta"] = pair.beta;
    return out;
}

LacunaryFit fit_from_py(const std::vector<std::uint64_t>& degrees, const py::sequence& coeffs,
                        const std::vector<std::uint64_t>& rows) {
    LacunaryFit fitted;
    fitted.degrees = Selection(degrees);
    fitted.coefficients = data_from_py(coeffs);
    if (fitted.coefficients.size() != fitted.degrees.size()) {
        throw py::value_error("coefficients and degrees have different lengths");
    }
    if (!rows.empty()) {
        fitted.design = pascal_submatrix(Selection(rows), fitted.degrees);
    }
    return fitted;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact rank, bases and invertible cores of Pascal-matrix submatrices, "
              "plus sparse-exponent least squares at x = 1";

    m.def(
        "binomial", [](std::uint64_t n, std::uint64_t k) { return to_py(binomial(n, k)); },
        py::arg("n"), py::arg("k"), "Exact C(n, k); 0 when k > n.");

    m.def(
        "submatrix",
        [](const std::vector<std::uint64_t>& rows, const std::vector<std::uint64_t>& cols) {
            return to_py(pascal_submatrix(selection_from_py(rows), selection_from_py(cols)));
        },
        py::arg("rows"), py::arg("cols"),
        "Exact Pascal submatrix with entry (i, j) = C(cols[j], rows[i]).");

    m.def(
        "generalized_vandermonde",
        [](const std::vector<std::uint64_t>& rows, const std::vector<std::uint64_t>& cols) {
            return to_py(generalized_vandermonde(selection_from_py(rows), selection_from_py(cols)));
        },
        py::arg("rows"), py::arg("cols"),
        "Normalized derivatives of the power basis at x = 1; equals submatrix(rows, cols).");

    m.def(
        "is_ordered_subpair",
        [](const std::vector<std::uint64_t>& sub_rows, const std::vector<std::uint64_t>& sub_cols,
           const std::vector<std::uint64_t>& rows, const std::vector<std::uint64_t>& cols) {
            return is_ordered_subpair(selection_from_py(sub_rows), selection_from_py(sub_cols),
                                      selection_from_py(rows), selection_from_py(cols));
        },
        py::arg("sub_rows"), py::arg("sub_cols"), py::arg("rows"), py::arg("cols"),
        "Equal-length subsequences with sub_rows[i] <= sub_cols[i] everywhere.");

    m.def(
        "maximal_subpair",
        [](const std::vector<std::uint64_t>& rows, const std::vector<std::uint64_t>& cols) {
            return subpair_to_py(maximal_subpair(selection_from_py(rows),
                                                 selection_from_py(cols)));
        },
        py::arg("rows"), py::arg("cols"),
        "Greedy positions {alpha, beta} of a maximal ordered sub-pair.");

    m.def(
        "longest_subpair_length",
        [](const std::vector<std::uint64_t>& rows, const std::vector<std::uint64_t>& cols) {
            return longest_subpair_length(selection_from_py(rows), selection_from_py(cols));
        },
        py::arg("rows"), py::arg("cols"),
        "Dynamic-programming reference for the maximal ordered sub-pair length.");

    m.def(
        "index_matrix",
        [](const std::vector<std::size_t>& alpha, const std::vector<std::size_t>& beta,
           std::size_t rows, std::size_t cols) {
            return to_py(index_matrix(SubPairIndices{alpha, beta}, rows, cols));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("rows"), py::arg("cols"),
        "0/1 matrix with ones exactly at (alpha[i], beta[i]).");

    m.def(
        "rank_report",
        [](const std::vector<std::uint64_t>& rows, const std::vector<std::uint64_t>& cols) {
            RankReport report = rank_report(selection_from_py(rows), selection_from_py(cols));
            py::dict out;
            out["rank"] = report.rank;
            out["alpha"] = report.pair.alpha;
            out["beta"] = report.pair.beta;
            out["row_basis"] = report.row_basis.values();
            out["col_basis"] = report.col_basis.values();
            out["core"] = to_py(report.core);
            return out;
        },
        py::arg("rows"), py::arg("cols"),
        "Rank with certifying sub-pair, row/column bases and invertible core.");

    m.def(
        "is_invertible",
        [](const std::vector<std::uint64_t>& rows, const std::vector<std::uint64_t>& cols) {
            return is_invertible(selection_from_py(rows), selection_from_py(cols));
        },
        py::arg("rows"), py::arg("cols"),
        "Square-case invertibility: rows[i] <= cols[i] for all i.");

    m.def(
        "matrix_rank", [](const py::sequence& entries) { return bareiss_rank(matrix_from_py(entries)); },
        py::arg("entries"),
        "Exact rank of an integer matrix by fraction-free elimination.");

    m.def(
        "matrix_determinant",
        [](const py::sequence& entries) { return to_py(bareiss_determinant(matrix_from_py(entries))); },
        py::arg("entries"),
        "Exact determinant of a square integer matrix by fraction-free elimination.");

    m.def(
        "fit",
        [](const std::vector<std::uint64_t>& rows, const std::vector<std::uint64_t>& cols,
           const py::sequence& data) {
            LacunaryFit fitted =
                fit(selection_from_py(rows), selection_from_py(cols), data_from_py(data));
            py::dict out;
            out["degrees"] = fitted.degrees.values();
            out["coefficients"] = to_py(fitted.coefficients);
            out["residual_sq"] = to_py(fitted.residual_sq);
            out["design"] = to_py(fitted.design);
            return out;
        },
        py::arg("rows"), py::arg("cols"), py::arg("data"),
        "Exact least-squares fit against the maximal sub-pair's degree sequence. "
        "Data entries may be ints, Fractions or strings; floats are rejected.");

    m.def(
        "fit_with_degrees",
        [](const std::vector<std::uint64_t>& rows, const std::vector<std::uint64_t>& cols,
           const std::vector<std::uint64_t>& degrees, const py::sequence& data) {
            LacunaryFit fitted = fit_with_degrees(selection_from_py(rows), selection_from_py(cols),
                                                  selection_from_py(degrees), data_from_py(data));
            py::dict out;
            out["degrees"] = fitted.degrees.values();
            out["coefficients"] = to_py(fitted.coefficients);
            out["residual_sq"] = to_py(fitted.residual_sq);
            out["design"] = to_py(fitted.design);
            return out;
        },
        py::arg("rows"), py::arg("cols"), py::arg("degrees"), py::arg("data"),
        "Least-squares fit against a caller-chosen (not necessarily maximal) degree sequence.");

    m.def(
        "derivative_at_one",
        [](const std::vector<std::uint64_t>& degrees, const py::sequence& coefficients,
           std::uint64_t order) {
            return to_py(derivative_at_one(fit_from_py(degrees, coefficients, {}), order));
        },
        py::arg("degrees"), py::arg("coefficients"), py::arg("order"),
        "Order-th derivative at x = 1 of sum_j coefficients[j] * x^degrees[j].");

    m.def(
        "polynomial_string",
        [](const std::vector<std::uint64_t>& degrees, const py::sequence& coefficients,
           unsigned places) {
            return polynomial_string(fit_from_py(degrees, coefficients, {}), places);
        },
        py::arg("degrees"), py::arg("coefficients"), py::arg("places") = 4,
        "Display string with coefficients rounded half-even, e.g. '.7813 x^4 - .1046 x^9'.");

    m.def(
        "format_decimal",
        [](py::handle value, unsigned places) {
            return format_decimal(rational_from_py(value), places);
        },
        py::arg("value"), py::arg("places") = 4,
        "Fixed-point decimal string, rounding half to even.");
}
