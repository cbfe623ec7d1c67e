#include "lgriffiths/matrix.hpp"

#include <stdexcept>

namespace lgriffiths {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) out(k, k) = Rational(1);
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : data_) {
        if (!v.is_zero()) return false;
    }
    return true;
}

bool RationalMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r != c && !(*this)(r, c).is_zero()) return false;
        }
    }
    return true;
}

Rational RationalMatrix::max_abs() const {
    Rational best(0);
    for (const auto& v : data_) {
        Rational a = v.abs();
        if (a > best) best = std::move(a);
    }
    return best;
}

RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RationalMatrix out(lhs.rows_, rhs.cols_);
    for (std::size_t r = 0; r < lhs.rows_; ++r) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const Rational& a = lhs(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                const Rational& b = rhs(k, c);
                if (!b.is_zero()) out(r, c) += a * b;
            }
        }
    }
    return out;
}

RationalMatrix operator-(const RationalMatrix& lhs, const RationalMatrix& rhs) {
    if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) {
        throw std::invalid_argument("matrix difference: shape mismatch");
    }
    RationalMatrix out = lhs;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= rhs.data_[k];
    return out;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& A) {
    RationalMatrix m = A;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row) {
            for (std::size_t c = 0; c < cols; ++c) std::swap(m(row, c), m(pivot, c));
        }
        Rational inv = m(row, col).reciprocal();
        for (std::size_t c = col; c < cols; ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Rational factor = m(r, col);
            for (std::size_t c = col; c < cols; ++c) m(r, c) -= factor * m(row, c);
        }
        pivot_cols.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace lgriffiths
