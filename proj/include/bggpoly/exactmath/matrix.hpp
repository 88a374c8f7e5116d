/*
   Copyright 2026 The bggpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BGGPOLY_EXACTMATH_MATRIX_HPP
#define BGGPOLY_EXACTMATH_MATRIX_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bggpoly/exactmath/multipoly.hpp"
#include "bggpoly/exactmath/rational.hpp"

namespace bggpoly {

inline Rational zero_like(const Rational&) { return Rational{}; }
inline Rational one_like(const Rational&) { return Rational{1}; }
inline MultiPoly zero_like(const MultiPoly& p) { return MultiPoly(p.variable_count()); }
inline MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.variable_count(), Rational{1}); }

/// Dense row-major matrix over an exact ring. The matrix remembers its zero
/// element so that polynomial matrices keep a consistent variable count even
/// when empty.
template <class T>
class Matrix {
   public:
    Matrix() : Matrix(0, 0, T{}) {}
    Matrix(std::size_t rows, std::size_t cols, const T& zero)
        : rows_(rows), cols_(cols), zero_(zero_like(zero)), data_(rows * cols, zero_) {}

    static Matrix identity(std::size_t n, const T& zero) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(zero);
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
    [[nodiscard]] const T& zero() const noexcept { return zero_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    T& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return (*this)(i, j);
    }
    const T& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return (*this)(i, j);
    }

    [[nodiscard]] std::vector<T> column(std::size_t j) const {
        std::vector<T> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    [[nodiscard]] std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& rhs) {
        check_same_shape(rhs);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& rhs) {
        check_same_shape(rhs);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
        return *this;
    }
    Matrix& operator*=(const Rational& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
    Matrix operator-() const { return *this * Rational(-1); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: inner dimension mismatch");
        Matrix c(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (bkj.is_zero()) continue;
                    c(i, j) += aik * bkj;
                }
            }
        }
        return c;
    }

    /// Matrix-vector product.
    [[nodiscard]] std::vector<T> apply(std::span<const T> v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: length mismatch");
        std::vector<T> out(rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix: index out of range");
    }
    void check_same_shape(const Matrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_;
    std::size_t cols_;
    T zero_;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<MultiPoly>;

inline RatMatrix rat_zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols, Rational{}); }
inline RatMatrix rat_identity(std::size_t n) { return RatMatrix::identity(n, Rational{}); }
inline PolyMatrix poly_zero(std::size_t rows, std::size_t cols, std::size_t nvars) {
    return PolyMatrix(rows, cols, MultiPoly(nvars));
}
inline PolyMatrix poly_identity(std::size_t n, std::size_t nvars) { return PolyMatrix::identity(n, MultiPoly(nvars)); }

/// Entrywise constant polynomials.
inline PolyMatrix lift(const RatMatrix& m, std::size_t nvars) {
    PolyMatrix p = poly_zero(m.rows(), m.cols(), nvars);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = MultiPoly::constant(nvars, m(i, j));
    return p;
}

inline RatMatrix substitute(const PolyMatrix& m, std::span<const Rational> point) {
    RatMatrix r = rat_zero(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).evaluate(point);
    return r;
}

/// Exact k-th power; k = 0 gives the identity.
template <class T>
Matrix<T> power(const Matrix<T>& m, unsigned k) {
    if (!m.is_square()) throw std::invalid_argument("power: matrix is not square");
    Matrix<T> result = Matrix<T>::identity(m.rows(), m.zero());
    for (unsigned i = 0; i < k; ++i) result = result * m;
    return result;
}

inline PolyMatrix mat_mul_pow(const PolyMatrix& m, unsigned k) { return power(m, k); }

inline Rational trace(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("trace: matrix is not square");
    Rational t;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

inline RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

inline bool is_diagonal(const RatMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && !m(i, j).is_zero()) return false;
    return true;
}

/// Kronecker product a (x) b.
inline RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix k = rat_zero(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
        }
    return k;
}

}  // namespace bggpoly

#endif
