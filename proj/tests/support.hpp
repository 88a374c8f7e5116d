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

#ifndef BGGPOLY_TESTS_SUPPORT_HPP
#define BGGPOLY_TESTS_SUPPORT_HPP

// Random inputs and slow reference implementations used by the tests.

#include <cstddef>
#include <random>
#include <vector>

#include "bggpoly/exactmath/linalg.hpp"

namespace bggpoly::testing {

inline Rational random_rational(std::mt19937& rng, int span = 5, int max_den = 4) {
    std::uniform_int_distribution<int> num(-span, span), den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline MultiPoly random_poly(std::mt19937& rng, std::size_t n, unsigned max_degree = 3, int terms = 4) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    MultiPoly p(n);
    for (int t = 0; t < terms; ++t) {
        Exponent e(n, 0);
        unsigned budget = deg(rng);
        for (std::size_t v = 0; v < n && budget > 0; ++v) {
            std::uniform_int_distribution<unsigned> take(0, budget);
            e[v] = take(rng);
            budget -= e[v];
        }
        p.add_term(e, random_rational(rng));
    }
    return p;
}

inline RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.6) {
    std::bernoulli_distribution keep(density);
    RatMatrix m = rat_zero(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (keep(rng)) m(i, j) = random_rational(rng);
    return m;
}

// Textbook Gaussian elimination over the rationals, no fraction-free tricks.
inline std::size_t naive_rank(RatMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(p, k));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            const Rational f = m(i, c) / m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
        }
        ++r;
    }
    return r;
}

}  // namespace bggpoly::testing

#endif
