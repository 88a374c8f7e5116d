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

#ifndef BGGPOLY_BGGSOLVE_SOLVE_HPP
#define BGGPOLY_BGGSOLVE_SOLVE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bggpoly/exactmath/linalg.hpp"
#include "bggpoly/repforge.hpp"

namespace bggpoly {

/// Value of a parallel tractor at the base point, in the basis of the
/// representation.
struct TractorVector {
    std::vector<Rational> coords;

    static TractorVector basis(std::size_t dim, std::size_t k) {
        TractorVector v{std::vector<Rational>(dim)};
        v.coords.at(k) = Rational(1);
        return v;
    }

    friend bool operator==(const TractorVector&, const TractorVector&) = default;
};

struct SolutionSlot {
    std::string label;
    MultiPoly poly;
    friend bool operator==(const SolutionSlot&, const SolutionSlot&) = default;
};

/// Coefficients of a normal BGG solution in the normal frame of the quotient
/// bundle, one polynomial per grading-0 slot, in the slot order of the
/// representation.
struct SolutionSystem {
    GeometryKind geometry;
    std::string rep;
    std::size_t degree_bound = 0;
    std::vector<SolutionSlot> slots;
    TractorVector source;  // empty for hand-written catalog fixtures

    [[nodiscard]] std::size_t variable_count() const noexcept { return geometry.dimension(); }

    [[nodiscard]] std::vector<std::string> variables() const {
        std::vector<std::string> v;
        for (std::size_t i = 1; i <= variable_count(); ++i) v.push_back("x" + std::to_string(i));
        return v;
    }

    [[nodiscard]] const MultiPoly& at(const std::string& label) const {
        for (const auto& s : slots)
            if (s.label == label) return s.poly;
        throw std::out_of_range("SolutionSystem: no slot '" + label + "'");
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& s : slots)
            if (!s.poly.is_zero()) return false;
        return true;
    }

    [[nodiscard]] int max_degree() const {
        int d = -1;
        for (const auto& s : slots) d = std::max(d, s.poly.total_degree());
        return d;
    }

    friend bool operator==(const SolutionSystem&, const SolutionSystem&) = default;
};

/// rho(X) = sum_i x_i A_i in the representation.
inline PolyMatrix rho_symbolic(const Representation& rep) { return rho_symbolic(rep.generators, rep.dim()); }

/// rho(X)^{N+1} vanishes identically.
inline bool nilpotency_check(const Representation& rep) {
    return mat_mul_pow(rho_symbolic(rep), static_cast<unsigned>(rep.depth + 1)).is_zero();
}

/// exp(-rho(X)) = sum_{k=0}^{N} (-1)^k / k! rho(X)^k, exact.
inline PolyMatrix exp_neg_action(const Representation& rep) {
    const std::size_t n = rep.variable_count();
    const PolyMatrix rho = rho_symbolic(rep);
    PolyMatrix term = poly_identity(rep.dim(), n);
    PolyMatrix sum = term;
    for (std::size_t k = 1; k <= rep.depth; ++k) {
        term = term * rho;
        Rational c = inverse_factorial(static_cast<unsigned>(k));
        if (k % 2 == 1) c = -c;
        sum += term * c;
    }
    if (!(term * rho).is_zero())
        throw std::logic_error("exp_neg_action: rho(X)^(N+1) != 0 for " + rep.descriptor);
    return sum;
}

namespace detail {

inline SolutionSystem project_column(const Representation& rep, const PolyMatrix& expm, const TractorVector& v0) {
    if (v0.coords.size() != rep.dim())
        throw std::invalid_argument("solution_from_tractor: tractor has " + std::to_string(v0.coords.size()) +
                                    " coordinates, representation has dimension " + std::to_string(rep.dim()));
    const std::size_t n = rep.variable_count();
    SolutionSystem sys{rep.kind, rep.descriptor, rep.depth, {}, v0};
    for (auto slot : quotient_projection(rep).slots) {
        MultiPoly p(n);
        for (std::size_t j = 0; j < rep.dim(); ++j)
            if (!v0.coords[j].is_zero() && !expm(slot, j).is_zero()) p += expm(slot, j) * v0.coords[j];
        sys.slots.push_back({rep.labels[slot].text(), std::move(p)});
    }
    return sys;
}

}  // namespace detail

/// Pi(exp(-rho(X)) v0): the normal solution determined by the tractor value v0.
inline SolutionSystem solution_from_tractor(const Representation& rep, const TractorVector& v0) {
    return detail::project_column(rep, exp_neg_action(rep), v0);
}

/// One system per standard basis vector of the representation.
inline std::vector<SolutionSystem> solution_basis(const Representation& rep) {
    const PolyMatrix expm = exp_neg_action(rep);
    std::vector<SolutionSystem> out;
    out.reserve(rep.dim());
    for (std::size_t j = 0; j < rep.dim(); ++j)
        out.push_back(detail::project_column(rep, expm, TractorVector::basis(rep.dim(), j)));
    return out;
}

/// <exp(-rho(X)) v0, exp(-rho(X)) v0> as a polynomial.
inline MultiPoly tractor_norm(const Representation& rep, const TractorVector& v0) {
    if (!rep.form) throw std::invalid_argument("tractor_norm: " + rep.descriptor + " carries no invariant form");
    if (v0.coords.size() != rep.dim()) throw std::invalid_argument("tractor_norm: dimension mismatch");
    const std::size_t n = rep.variable_count();
    const PolyMatrix expm = exp_neg_action(rep);
    std::vector<MultiPoly> lifted;
    for (const auto& c : v0.coords) lifted.push_back(MultiPoly::constant(n, c));
    const std::vector<MultiPoly> w = expm.apply(lifted);
    const RatMatrix& g = *rep.form;
    MultiPoly norm(n);
    for (std::size_t a = 0; a < rep.dim(); ++a)
        for (std::size_t b = 0; b < rep.dim(); ++b)
            if (!g(a, b).is_zero() && !w[a].is_zero() && !w[b].is_zero()) norm += w[a] * w[b] * g(a, b);
    return norm;
}

/// The G-type invariant <v0, v0>, obtained from the transported tractor and
/// checked to be constant along the chart.
inline Rational g_type_invariant(const Representation& rep, const TractorVector& v0) {
    const MultiPoly norm = tractor_norm(rep, v0);
    if (!norm.is_constant())
        throw std::logic_error("g_type_invariant: tractor norm is not constant: " + norm.str());
    return norm.constant_term();
}

/// Some basis vector of maximal grading index yields a coefficient of degree
/// exactly N.
inline bool degree_bound_attained(const Representation& rep, const std::vector<SolutionSystem>& basis) {
    for (std::size_t j = 0; j < rep.dim(); ++j)
        if (rep.grading_index[j] == rep.depth && basis.at(j).max_degree() == static_cast<int>(rep.depth)) return true;
    return false;
}

/// Stacks systems as rows over the union of (slot, monomial) coordinates.
inline RatMatrix coefficient_matrix(std::span<const SolutionSystem> systems) {
    std::map<std::pair<std::string, Exponent>, std::size_t> column;
    for (const auto& s : systems)
        for (const auto& slot : s.slots)
            for (const auto& [e, c] : slot.poly.terms()) column.try_emplace({slot.label, e}, 0);
    std::size_t k = 0;
    for (auto& [key, idx] : column) idx = k++;
    RatMatrix m = rat_zero(systems.size(), column.size());
    for (std::size_t i = 0; i < systems.size(); ++i)
        for (const auto& slot : systems[i].slots)
            for (const auto& [e, c] : slot.poly.terms()) m(i, column.at({slot.label, e})) = c;
    return m;
}

inline std::size_t span_dimension(std::span<const SolutionSystem> systems) {
    return rank(coefficient_matrix(systems));
}

inline bool same_span(std::span<const SolutionSystem> a, std::span<const SolutionSystem> b) {
    std::vector<SolutionSystem> both(a.begin(), a.end());
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t ra = span_dimension(a);
    return ra == span_dimension(b) && ra == span_dimension(both);
}

}  // namespace bggpoly

#endif
