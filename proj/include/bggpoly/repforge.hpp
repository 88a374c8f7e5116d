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

#ifndef BGGPOLY_REPFORGE_HPP
#define BGGPOLY_REPFORGE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bggpoly/exactmath/linalg.hpp"
#include "bggpoly/liemodel.hpp"

namespace bggpoly {

/// Name of a basis vector, built structurally from the labels of the
/// representation it was constructed from.
struct BasisLabel {
    enum class Kind { Atom, Dual, Wedge, Sym, Pair, Span };

    Kind kind = Kind::Atom;
    std::vector<std::size_t> index;   // atom: {i}; wedge/sym: positions in the parent basis; span: {k}
    std::vector<BasisLabel> factors;  // parent labels for dual/wedge/sym/pair

    static BasisLabel atom(std::size_t i) { return {Kind::Atom, {i}, {}}; }
    static BasisLabel span(std::size_t k) { return {Kind::Span, {k}, {}}; }

    static BasisLabel dual_of(const BasisLabel& l) {
        if (l.kind == Kind::Dual) return l.factors.front();
        return {Kind::Dual, {}, {l}};
    }

    [[nodiscard]] bool composite() const { return kind == Kind::Wedge || kind == Kind::Sym || kind == Kind::Pair; }

    [[nodiscard]] std::string text() const {
        const auto wrap = [](const BasisLabel& l) { return l.composite() ? "(" + l.text() + ")" : l.text(); };
        const auto join = [&](const char* sep) {
            std::string s;
            for (std::size_t k = 0; k < factors.size(); ++k) s += (k ? sep : "") + wrap(factors[k]);
            return s;
        };
        switch (kind) {
            case Kind::Atom:
                return "e" + std::to_string(index.front());
            case Kind::Dual:
                return wrap(factors.front()) + "*";
            case Kind::Wedge:
                return join("^");
            case Kind::Sym:
                return join(".");
            case Kind::Pair:
                return join("(x)");
            case Kind::Span:
                return "v" + std::to_string(index.front());
        }
        return {};
    }

    friend bool operator==(const BasisLabel& a, const BasisLabel& b) { return a.text() == b.text(); }
};

/// A finite-dimensional g-module in a basis adapted to the grading: the action
/// of every g_{-1} generator, the (diagonal) action of E, and the grading index
/// of each basis vector shifted into 0..N.
struct Representation {
    GeometryKind kind;
    std::string descriptor;
    std::vector<BasisLabel> labels;
    std::vector<RatMatrix> generators;
    RatMatrix grading_element;
    std::vector<std::size_t> grading_index;
    std::size_t depth = 0;
    std::optional<RatMatrix> form;
    std::vector<std::string> notes;

    [[nodiscard]] std::size_t dim() const noexcept { return labels.size(); }
    [[nodiscard]] std::size_t variable_count() const noexcept { return kind.dimension(); }

    [[nodiscard]] std::optional<std::size_t> find(const std::string& label_text) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i].text() == label_text) return i;
        return std::nullopt;
    }
};

/// Raised when a span handed to invariant_subrep is not preserved by the action.
class NotInvariantError : public std::invalid_argument {
   public:
    NotInvariantError(const std::string& what, std::size_t generator, std::size_t vector)
        : std::invalid_argument(what), generator_(generator), vector_(vector) {}
    /// Index of the offending generator; n means the grading element.
    [[nodiscard]] std::size_t generator() const noexcept { return generator_; }
    [[nodiscard]] std::size_t vector() const noexcept { return vector_; }

   private:
    std::size_t generator_;
    std::size_t vector_;
};

namespace detail {

// Fills grading_index and depth from the diagonal of E.
inline void assign_grading(Representation& rep) {
    if (!is_diagonal(rep.grading_element)) throw std::logic_error("representation: E is not diagonal");
    const std::size_t d = rep.dim();
    rep.grading_index.assign(d, 0);
    rep.depth = 0;
    if (d == 0) return;
    Rational lo = rep.grading_element(0, 0);
    for (std::size_t i = 1; i < d; ++i) lo = std::min(lo, rep.grading_element(i, i));
    for (std::size_t i = 0; i < d; ++i) {
        const Rational shift = rep.grading_element(i, i) - lo;
        if (!shift.is_integer()) throw std::logic_error("representation: non-integral E-eigenvalue difference");
        rep.grading_index[i] = static_cast<std::size_t>(shift.numerator().get_ui());
        rep.depth = std::max(rep.depth, rep.grading_index[i]);
    }
}

// Sign of the permutation sorting `v` (entries distinct), and sorts it.
inline int sort_with_sign(std::vector<std::size_t>& v) {
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    return sign;
}

inline void combinations(std::size_t n, std::size_t r, bool with_repetition,
                         std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == r) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, with_repetition ? i : i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

inline Rational determinant(RatMatrix m) {
    const std::size_t n = m.rows();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Rational{};
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

inline Rational permanent(const RatMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Rational total;
    do {
        Rational t(1);
        for (std::size_t i = 0; i < n && !t.is_zero(); ++i) t *= m(i, perm[i]);
        total += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline RatMatrix submatrix(const RatMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    RatMatrix s = rat_zero(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
    return s;
}

// Derivation action of A on the r-th exterior or symmetric power, in the
// basis `basis` of ordered multi-indices.
inline RatMatrix power_action(const RatMatrix& a, const std::vector<std::vector<std::size_t>>& basis, bool exterior) {
    std::map<std::vector<std::size_t>, std::size_t> position;
    for (std::size_t k = 0; k < basis.size(); ++k) position.emplace(basis[k], k);
    RatMatrix out = rat_zero(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto& idx = basis[col];
        for (std::size_t slot = 0; slot < idx.size(); ++slot) {
            for (std::size_t m = 0; m < a.rows(); ++m) {
                const Rational& coeff = a(m, idx[slot]);
                if (coeff.is_zero()) continue;
                std::vector<std::size_t> img = idx;
                img[slot] = m;
                int sign = 1;
                if (exterior) {
                    if (std::count(img.begin(), img.end(), m) > 1) continue;
                    sign = sort_with_sign(img);
                } else {
                    std::sort(img.begin(), img.end());
                }
                out(position.at(img), col) += sign > 0 ? coeff : -coeff;
            }
        }
    }
    return out;
}

inline RatMatrix power_diagonal(const RatMatrix& e, const std::vector<std::vector<std::size_t>>& basis) {
    RatMatrix out = rat_zero(basis.size(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (auto i : basis[k]) out(k, k) += e(i, i);
    return out;
}

}  // namespace detail

/// The defining representation of the model.
inline Representation standard_rep(const GradedLieModel& model) {
    Representation rep{model.kind, "std", {}, model.generators, model.grading_element, {}, 0, model.form, {}};
    for (std::size_t i = 0; i < model.ambient_dim; ++i) rep.labels.push_back(BasisLabel::atom(i));
    detail::assign_grading(rep);
    return rep;
}

/// One-dimensional trivial representation.
inline Representation trivial_rep(const GradedLieModel& model) {
    Representation rep{model.kind, "triv", {BasisLabel::span(0)}, {}, rat_zero(1, 1), {}, 0, std::nullopt, {}};
    for (std::size_t i = 0; i < model.generators.size(); ++i) rep.generators.push_back(rat_zero(1, 1));
    if (model.form) rep.form = rat_identity(1);
    detail::assign_grading(rep);
    return rep;
}

/// Contragredient: actions become negative transposes, the form its inverse.
inline Representation dual_rep(const Representation& rep) {
    Representation out{rep.kind, "dual(" + rep.descriptor + ")", {}, {}, -rep.grading_element.transpose(), {}, 0,
                       std::nullopt, {}};
    if (rep.descriptor.rfind("dual(", 0) == 0 && rep.descriptor.back() == ')')
        out.descriptor = rep.descriptor.substr(5, rep.descriptor.size() - 6);
    for (const auto& l : rep.labels) out.labels.push_back(BasisLabel::dual_of(l));
    for (const auto& g : rep.generators) out.generators.push_back(-g.transpose());
    if (rep.form) out.form = inverse(*rep.form);
    detail::assign_grading(out);
    return out;
}

/// r-th exterior power in the basis of increasing wedge labels.
inline Representation exterior_power(const Representation& rep, std::size_t r) {
    if (r < 1 || r > rep.dim()) throw std::invalid_argument("exterior_power: degree out of range");
    std::vector<std::vector<std::size_t>> basis;
    detail::combinations(rep.dim(), r, false, basis);
    Representation out{rep.kind, "ext(" + std::to_string(r) + "," + rep.descriptor + ")", {}, {},
                       detail::power_diagonal(rep.grading_element, basis), {}, 0, std::nullopt, {}};
    for (const auto& idx : basis) {
        BasisLabel l{BasisLabel::Kind::Wedge, idx, {}};
        for (auto i : idx) l.factors.push_back(rep.labels[i]);
        if (r == 1) l = rep.labels[idx.front()];
        out.labels.push_back(std::move(l));
    }
    for (const auto& g : rep.generators) out.generators.push_back(detail::power_action(g, basis, true));
    if (rep.form) {
        RatMatrix f = rat_zero(basis.size(), basis.size());
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = 0; b < basis.size(); ++b)
                f(a, b) = detail::determinant(detail::submatrix(*rep.form, basis[a], basis[b]));
        out.form = std::move(f);
    }
    if (r == 1) out.descriptor = rep.descriptor;
    detail::assign_grading(out);
    return out;
}

/// k-th symmetric power in the commutative monomial basis (weakly increasing
/// multi-indices).
inline Representation symmetric_power(const Representation& rep, std::size_t k) {
    if (k < 1) throw std::invalid_argument("symmetric_power: degree must be >= 1");
    std::vector<std::vector<std::size_t>> basis;
    detail::combinations(rep.dim(), k, true, basis);
    Representation out{rep.kind, "sym(" + std::to_string(k) + "," + rep.descriptor + ")", {}, {},
                       detail::power_diagonal(rep.grading_element, basis), {}, 0, std::nullopt, {}};
    for (const auto& idx : basis) {
        BasisLabel l{BasisLabel::Kind::Sym, idx, {}};
        for (auto i : idx) l.factors.push_back(rep.labels[i]);
        if (k == 1) l = rep.labels[idx.front()];
        out.labels.push_back(std::move(l));
    }
    for (const auto& g : rep.generators) out.generators.push_back(detail::power_action(g, basis, false));
    if (rep.form) {
        RatMatrix f = rat_zero(basis.size(), basis.size());
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = 0; b < basis.size(); ++b)
                f(a, b) = detail::permanent(detail::submatrix(*rep.form, basis[a], basis[b]));
        out.form = std::move(f);
    }
    if (k == 1) out.descriptor = rep.descriptor;
    detail::assign_grading(out);
    return out;
}

/// a (x) b with pair labels, a-major ordering.
inline Representation tensor_product(const Representation& a, const Representation& b) {
    if (!(a.kind == b.kind)) throw std::invalid_argument("tensor_product: representations of different models");
    const RatMatrix ia = rat_identity(a.dim());
    const RatMatrix ib = rat_identity(b.dim());
    Representation out{a.kind, "tensor(" + a.descriptor + "," + b.descriptor + ")", {}, {},
                       kronecker(a.grading_element, ib) + kronecker(ia, b.grading_element), {}, 0, std::nullopt, {}};
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            out.labels.push_back(BasisLabel{BasisLabel::Kind::Pair, {i, j}, {a.labels[i], b.labels[j]}});
    for (std::size_t g = 0; g < a.generators.size(); ++g)
        out.generators.push_back(kronecker(a.generators[g], ib) + kronecker(ia, b.generators[g]));
    if (a.form && b.form) out.form = kronecker(*a.form, *b.form);
    detail::assign_grading(out);
    return out;
}

/// Restriction to an invariant subspace. The span is re-expressed in a basis
/// of E-eigenvectors in reduced echelon form (per eigenvalue), so coordinates
/// of a vector in the span are its entries at the pivot positions. Basis
/// vectors that coincide with a standard basis vector keep its label.
inline Representation invariant_subrep(const Representation& rep, const std::vector<std::vector<Rational>>& span) {
    const std::size_t d = rep.dim();
    for (const auto& v : span)
        if (v.size() != d) throw std::invalid_argument("invariant_subrep: vector length mismatch");

    std::map<Rational, std::vector<std::size_t>> eigen_positions;
    for (std::size_t i = 0; i < d; ++i) eigen_positions[rep.grading_element(i, i)].push_back(i);

    std::vector<std::vector<Rational>> basis;
    std::vector<std::size_t> pivots;
    for (const auto& [value, positions] : eigen_positions) {
        RatMatrix block = rat_zero(span.size(), positions.size());
        for (std::size_t s = 0; s < span.size(); ++s)
            for (std::size_t k = 0; k < positions.size(); ++k) block(s, k) = span[s][positions[k]];
        const EchelonForm e = rref(block);
        for (std::size_t r = 0; r < e.rank(); ++r) {
            std::vector<Rational> v(d);
            for (std::size_t k = 0; k < positions.size(); ++k) v[positions[k]] = e.reduced(r, k);
            basis.push_back(std::move(v));
            pivots.push_back(positions[e.pivots[r]]);
        }
    }
    const std::size_t k = basis.size();
    {
        // keep the parent's basis order
        std::vector<std::size_t> order(k);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
        std::vector<std::vector<Rational>> sorted_basis;
        std::vector<std::size_t> sorted_pivots;
        for (auto j : order) {
            sorted_basis.push_back(std::move(basis[j]));
            sorted_pivots.push_back(pivots[j]);
        }
        basis = std::move(sorted_basis);
        pivots = std::move(sorted_pivots);
    }
    if (k != rank(from_rows(span, d)))
        throw NotInvariantError("invariant_subrep: span is not invariant under E", rep.generators.size(), 0);

    // Coordinates of w in the chosen basis, or nullopt when w leaves the span.
    const auto coordinates = [&](const std::vector<Rational>& w) -> std::optional<std::vector<Rational>> {
        std::vector<Rational> c(k);
        for (std::size_t j = 0; j < k; ++j) c[j] = w[pivots[j]];
        for (std::size_t i = 0; i < d; ++i) {
            Rational recon;
            for (std::size_t j = 0; j < k; ++j)
                if (!c[j].is_zero() && !basis[j][i].is_zero()) recon += c[j] * basis[j][i];
            if (!(recon == w[i])) return std::nullopt;
        }
        return c;
    };

    const auto restrict = [&](const RatMatrix& a, std::size_t gen_index) {
        RatMatrix out = rat_zero(k, k);
        for (std::size_t j = 0; j < k; ++j) {
            auto c = coordinates(a.apply(basis[j]));
            if (!c)
                throw NotInvariantError("invariant_subrep: generator " + std::to_string(gen_index + 1) +
                                            " maps basis vector " + std::to_string(j) + " out of the span",
                                        gen_index, j);
            for (std::size_t i = 0; i < k; ++i) out(i, j) = (*c)[i];
        }
        return out;
    };

    Representation out{rep.kind, rep.descriptor, {}, {}, restrict(rep.grading_element, rep.generators.size()), {}, 0,
                       std::nullopt, {}};
    for (std::size_t j = 0; j < k; ++j) {
        const bool unit = std::count_if(basis[j].begin(), basis[j].end(), [](const Rational& x) { return !x.is_zero(); }) == 1 &&
                          basis[j][pivots[j]].is_one();
        out.labels.push_back(unit ? rep.labels[pivots[j]] : BasisLabel::span(j));
    }
    for (std::size_t g = 0; g < rep.generators.size(); ++g) out.generators.push_back(restrict(rep.generators[g], g));
    if (rep.form) {
        RatMatrix b = rat_zero(d, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < d; ++i) b(i, j) = basis[j][i];
        out.form = b.transpose() * *rep.form * b;
    }
    detail::assign_grading(out);
    return out;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Matrix of the wedge product S^2(Lambda^2 W*) -> Lambda^4 W* in the bases
/// produced by symmetric_power(exterior_power(dual(W), 2), 2) and
/// exterior_power(dual(W), 4).
inline RatMatrix wedge_map_s2_lambda2(std::size_t w_dim) {
    std::vector<std::vector<std::size_t>> pairs, quads, sym_basis;
    detail::combinations(w_dim, 2, false, pairs);
    detail::combinations(w_dim, 4, false, quads);
    detail::combinations(pairs.size(), 2, true, sym_basis);
    std::map<std::vector<std::size_t>, std::size_t> quad_pos;
    for (std::size_t k = 0; k < quads.size(); ++k) quad_pos.emplace(quads[k], k);
    RatMatrix m = rat_zero(quads.size(), sym_basis.size());
    for (std::size_t col = 0; col < sym_basis.size(); ++col) {
        std::vector<std::size_t> idx = pairs[sym_basis[col][0]];
        const auto& second = pairs[sym_basis[col][1]];
        idx.insert(idx.end(), second.begin(), second.end());
        std::vector<std::size_t> sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        const int sign = detail::sort_with_sign(idx);
        m(quad_pos.at(idx), col) = Rational(sign);
    }
    return m;
}

/// The Cartan component of S^2(Lambda^2 W*) for W the projective standard
/// representation, realized as the kernel of the wedge product into
/// Lambda^4 W*. For n < 3 the target vanishes and the full space is returned.
inline Representation cartan_kernel_S2Lambda2(const GradedLieModel& model) {
    if (!model.kind.is_projective()) throw std::invalid_argument("cartanS2L2: needs a projective model");
    const Representation s2 = symmetric_power(exterior_power(dual_rep(standard_rep(model)), 2), 2);
    const std::size_t w = model.ambient_dim;
    std::vector<std::vector<Rational>> kernel;
    if (w < 4) {
        for (std::size_t i = 0; i < s2.dim(); ++i) {
            std::vector<Rational> v(s2.dim());
            v[i] = Rational(1);
            kernel.push_back(std::move(v));
        }
    } else {
        const RatMatrix wedge = wedge_map_s2_lambda2(w);
        // The wedge map is E-equivariant, so solve eigenspace by eigenspace to
        // get a graded basis of the kernel.
        std::map<Rational, std::vector<std::size_t>> eigen_positions;
        for (std::size_t i = 0; i < s2.dim(); ++i) eigen_positions[s2.grading_element(i, i)].push_back(i);
        for (const auto& [value, cols] : eigen_positions) {
            RatMatrix block = rat_zero(wedge.rows(), cols.size());
            for (std::size_t r = 0; r < wedge.rows(); ++r)
                for (std::size_t c = 0; c < cols.size(); ++c) block(r, c) = wedge(r, cols[c]);
            for (const auto& v : exact_nullspace(block)) {
                std::vector<Rational> full(s2.dim());
                for (std::size_t c = 0; c < cols.size(); ++c) full[cols[c]] = v[c];
                kernel.push_back(std::move(full));
            }
        }
    }
    Representation out = invariant_subrep(s2, kernel);
    out.descriptor = "cartanS2L2";
    if (w < 4) out.notes.push_back("cartanS2L2: Lambda^4 vanishes for n < 3; using all of S^2(Lambda^2 W*)");
    return out;
}

/// Pi: restriction to the grading-0 coordinates.
struct QuotientProjection {
    std::vector<std::size_t> slots;

    template <class T>
    [[nodiscard]] std::vector<T> apply(const std::vector<T>& v) const {
        std::vector<T> out;
        out.reserve(slots.size());
        for (auto s : slots) out.push_back(v.at(s));
        return out;
    }
};

inline QuotientProjection quotient_projection(const Representation& rep) {
    QuotientProjection pi;
    for (std::size_t i = 0; i < rep.dim(); ++i)
        if (rep.grading_index[i] == 0) pi.slots.push_back(i);
    return pi;
}

/// Entrywise check that every generator lowers the grading index by exactly one.
inline bool lowers_grading(const Representation& rep) {
    for (const auto& g : rep.generators)
        for (std::size_t a = 0; a < rep.dim(); ++a)
            for (std::size_t b = 0; b < rep.dim(); ++b)
                if (!g(a, b).is_zero() && rep.grading_index[a] + 1 != rep.grading_index[b]) return false;
    return true;
}

/// Whether A^T G + G A = 0 for every generator and for E.
inline bool preserves_form(const Representation& rep) {
    if (!rep.form) return false;
    const RatMatrix& g = *rep.form;
    for (const auto& a : rep.generators)
        if (!(a.transpose() * g + g * a).is_zero()) return false;
    return (rep.grading_element.transpose() * g + g * rep.grading_element).is_zero();
}

}  // namespace bggpoly

#endif
