#pragma once

/**
 * @file matrix.hpp
 * @brief Dense row-major matrix of exact rationals, plus the few linear
 * algebra routines the verification suites need.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "lgriffiths/rational.hpp"

namespace lgriffiths {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] RationalMatrix transpose() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_diagonal() const;
    /// Largest |entry|; 0 for an empty matrix.
    [[nodiscard]] Rational max_abs() const;

    friend RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs);
    friend RationalMatrix operator-(const RationalMatrix& lhs, const RationalMatrix& rhs);
    friend bool operator==(const RationalMatrix& lhs, const RationalMatrix& rhs) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Basis of the right nullspace {v : A v = 0}, by exact Gauss-Jordan
/// elimination. Each basis vector has a 1 in its pivot-free coordinate.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& A);

}  // namespace lgriffiths
