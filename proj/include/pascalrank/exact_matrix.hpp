#pragma once

#include "pascalrank/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace pascalrank {

/// Dense row-major matrix of exact integers. 0xk and kx0 shapes are legal.
class ExactMatrix {
public:
    ExactMatrix() = default;

    /// Zero-filled rows x cols matrix.
    ExactMatrix(std::size_t rows, std::size_t cols);

    /// Takes a row-major grid; entries.size() must equal rows * cols.
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

    /// Builds from nested lists; all rows must have equal length.
    static ExactMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Integer& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b);

    ExactMatrix transposed() const;

    bool operator==(const ExactMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

/// a * x over the rationals; x.size() must equal a.cols().
std::vector<Rational> multiply(const ExactMatrix& a, const std::vector<Rational>& x);

/// a * x over the integers; x.size() must equal a.cols().
std::vector<Integer> multiply(const ExactMatrix& a, const std::vector<Integer>& x);

} // namespace pascalrank
