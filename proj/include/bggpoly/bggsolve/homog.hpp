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

#ifndef BGGPOLY_BGGSOLVE_HOMOG_HPP
#define BGGPOLY_BGGSOLVE_HOMOG_HPP

#include <cstddef>
#include <vector>

#include "bggpoly/liemodel.hpp"

namespace bggpoly {

/// Generalized homogeneous coordinates in the trivialization X^0 = 1.
struct HomogCoords {
    GeometryKind geometry;
    std::vector<MultiPoly> coords;
};

/// sum_i eps_i x_i^2
inline MultiPoly signature_quadric(const GeometryKind& kind) {
    const std::size_t n = kind.dimension();
    const auto eps = kind.signature();
    MultiPoly q(n);
    for (std::size_t i = 0; i < n; ++i) q += MultiPoly::variable(n, i) * MultiPoly::variable(n, i) * Rational(eps[i]);
    return q;
}

/// Projective: (1, x_1, ..., x_n). Conformal: (1, eps_1 x_1, ..., eps_n x_n,
/// -1/2 sum eps_j x_j^2), the last sign being the one that puts the point on
/// the null cone.
inline HomogCoords homog_coords(const GeometryKind& kind) {
    const std::size_t n = kind.dimension();
    HomogCoords h{kind, {MultiPoly::constant(n, Rational(1))}};
    if (kind.is_projective()) {
        for (std::size_t i = 0; i < n; ++i) h.coords.push_back(MultiPoly::variable(n, i));
        return h;
    }
    const auto eps = kind.signature();
    for (std::size_t i = 0; i < n; ++i) h.coords.push_back(MultiPoly::variable(n, i) * Rational(eps[i]));
    h.coords.push_back(signature_quadric(kind) * Rational(-1, 2));
    return h;
}

/// 2 X^0 X^{n+1} + sum eps_i (X^i)^2; identically zero for valid conformal coordinates.
inline MultiPoly quadric_residual(const HomogCoords& h) {
    const std::size_t n = h.geometry.dimension();
    const auto eps = h.geometry.signature();
    MultiPoly r = h.coords.front() * h.coords.back() * Rational(2);
    for (std::size_t i = 1; i <= n; ++i) r += h.coords[i] * h.coords[i] * Rational(eps[i - 1]);
    return r;
}

}  // namespace bggpoly

#endif
