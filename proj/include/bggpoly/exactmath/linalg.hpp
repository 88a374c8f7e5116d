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

#ifndef BGGPOLY_EXACTMATH_LINALG_HPP
#define BGGPOLY_EXACTMATH_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bggpoly/exactmath/matrix.hpp"

namespace bggpoly {

/// Reduced row echelon form together with its pivot columns.
struct EchelonForm {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;
    [[nodiscard]] std::size_t rank() const noexcept { return pivots.size(); }
};

namespace detail {

// Clears denominators row by row so Bareiss can run over the integers.
inline std::vector<std::vector<mpz_class>> integer_rows(const RatMatrix& m) {
    std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).value().get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const mpq_class& q = m(i, j).value();
            rows[i][j] = q.get_num() * (l / q.get_den());
        }
    }
    return rows;
}

// Fraction-free forward elimination. Every intermediate entry is a minor of the
// input, so the division by the previous pivot is exact.
inline std::vector<std::size_t> bareiss_forward(std::vector<std::vector<mpz_class>>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = a.size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

/// Exact RREF via fraction-free forward elimination followed by rational
/// back substitution.
inline EchelonForm rref(const RatMatrix& m) {
    auto a = detail::integer_rows(m);
    auto pivots = detail::bareiss_forward(a, m.cols());
    const std::size_t rank = pivots.size();

    RatMatrix r = rat_zero(rank, m.cols());
    for (std::size_t i = 0; i < rank; ++i) {
        const mpz_class& lead = a[i][pivots[i]];
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (a[i][j] != 0) r(i, j) = Rational(mpq_class(a[i][j], lead));
    }
    for (std::size_t i = rank; i-- > 0;) {
        for (std::size_t k = 0; k < i; ++k) {
            const Rational f = r(k, pivots[i]);
            if (f.is_zero()) continue;
            for (std::size_t j = pivots[i]; j < m.cols(); ++j)
                if (!r(i, j).is_zero()) r(k, j) -= f * r(i, j);
        }
    }
    return {std::move(r), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& m) {
    auto a = detail::integer_rows(m);
    return detail::bareiss_forward(a, m.cols()).size();
}

/// Basis of the right kernel {v : m v = 0}; dimension cols - rank.
inline std::vector<std::vector<Rational>> exact_nullspace(const RatMatrix& m) {
    const EchelonForm e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = Rational(1);
        for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Rows stacked into a matrix; all rows must have length `cols`.
inline RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    RatMatrix m = rat_zero(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged input");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

inline RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
    const std::size_t n = m.rows();
    RatMatrix aug = rat_zero(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rational(1);
    }
    const EchelonForm e = rref(aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("inverse: matrix is singular");
    RatMatrix inv = rat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

}  // namespace bggpoly

#endif
