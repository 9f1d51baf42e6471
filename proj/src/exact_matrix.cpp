#include "pascalrank/exact_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pascalrank {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("entry grid has " + std::to_string(entries_.size()) +
                                    " elements, expected " + std::to_string(rows_ * cols_));
    }
}

ExactMatrix ExactMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Integer> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) {
            throw std::invalid_argument("ragged row list: expected " + std::to_string(c) +
                                        " columns");
        }
        for (long v : row) entries.emplace_back(v);
    }
    return ExactMatrix(r, c, std::move(entries));
}

void ExactMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) {
        std::swap(entries_[a * cols_ + j], entries_[b * cols_ + j]);
    }
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()));
    }
    ExactMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

std::vector<Rational> multiply(const ExactMatrix& a, const std::vector<Rational>& x) {
    if (x.size() != a.cols()) {
        throw std::invalid_argument("matrix-vector shape mismatch: " + std::to_string(a.cols()) +
                                    " columns vs vector of length " + std::to_string(x.size()));
    }
    std::vector<Rational> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational sum;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            sum += Rational(a(i, j)) * x[j];
        }
        out[i] = sum;
    }
    return out;
}

std::vector<Integer> multiply(const ExactMatrix& a, const std::vector<Integer>& x) {
    if (x.size() != a.cols()) {
        throw std::invalid_argument("matrix-vector shape mismatch: " + std::to_string(a.cols()) +
                                    " columns vs vector of length " + std::to_string(x.size()));
    }
    std::vector<Integer> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out[i] += a(i, j) * x[j];
        }
    }
    return out;
}

} // namespace pascalrank
