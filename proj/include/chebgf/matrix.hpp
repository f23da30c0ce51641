#pragma once

// Small dense matrices over an exact ring, with a fraction-free determinant.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chebgf/rational.hpp"

namespace chebgf {

template <class C>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, C(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = C(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    C& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const C& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    C trace() const {
        C s(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
        return s;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<C> data_;
};

/// a^e by repeated squaring.
template <class C>
Matrix<C> matrix_pow(Matrix<C> a, unsigned e) {
    Matrix<C> r = Matrix<C>::identity(a.rows());
    while (e) {
        if (e & 1u) r = r * a;
        e >>= 1;
        if (e) a = a * a;
    }
    return r;
}

/// Determinant by Bareiss fraction-free elimination. Every division is
/// exact (Sylvester's identity), so C only needs to be an integral domain
/// with exact_div.
template <class C>
C bareiss_determinant(Matrix<C> m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("bareiss_determinant: matrix not square");
    if (n == 0) return C(1);
    bool negate = false;
    C prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(m(p, k))) ++p;
            if (p == n) return C(0);
            m.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                C v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = exact_div(v, prev);
            }
            m(i, k) = C(0);
        }
        prev = m(k, k);
    }
    C d = m(n - 1, n - 1);
    return negate ? C(-d) : d;
}

}  // namespace chebgf
