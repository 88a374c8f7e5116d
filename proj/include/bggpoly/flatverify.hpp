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

#ifndef BGGPOLY_FLATVERIFY_HPP
#define BGGPOLY_FLATVERIFY_HPP

// Flat-model differential operators. On the homogeneous model with abelian
// g_{-1} the normal frames are coordinate frames, so every covariant
// derivative below is a plain partial derivative.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bggpoly/bggsolve/solve.hpp"
#include "bggpoly/exactmath/linalg.hpp"

namespace bggpoly {

using MultiIndex = std::vector<std::size_t>;

/// Diagonal flat metric diag(eps_1, ..., eps_n).
struct FlatMetric {
    std::vector<int> eps;

    static FlatMetric euclidean(std::size_t n) { return {std::vector<int>(n, 1)}; }
    static FlatMetric of(const GeometryKind& kind) { return {kind.signature()}; }

    [[nodiscard]] std::size_t dimension() const noexcept { return eps.size(); }
};

enum class FieldKind { Scalar, Vector, Symmetric, Alternating };

/// Polynomial tensor field on the flat chart, stored by canonical multi-index:
/// nondecreasing for symmetric fields, strictly increasing for alternating ones.
class PolyTensorField {
   public:
    PolyTensorField(FieldKind kind, std::size_t dimension, std::size_t valence)
        : kind_(kind), n_(dimension), valence_(valence) {
        if (kind == FieldKind::Scalar && valence != 0) throw std::invalid_argument("scalar field has valence 0");
        if (kind == FieldKind::Vector && valence != 1) throw std::invalid_argument("vector field has valence 1");
    }

    static PolyTensorField scalar(const MultiPoly& p) {
        PolyTensorField f(FieldKind::Scalar, p.variable_count(), 0);
        f.set({}, p);
        return f;
    }

    [[nodiscard]] FieldKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return n_; }
    [[nodiscard]] std::size_t valence() const noexcept { return valence_; }
    [[nodiscard]] const std::map<MultiIndex, MultiPoly>& components() const noexcept { return comps_; }

    void set(MultiIndex idx, const MultiPoly& value) {
        if (value.variable_count() != n_) throw std::invalid_argument("PolyTensorField: variable count mismatch");
        const auto [canon, sign] = canonical(std::move(idx));
        if (sign == 0) throw std::invalid_argument("PolyTensorField: repeated index in alternating field");
        if (value.is_zero()) {
            comps_.erase(canon);
            return;
        }
        comps_[canon] = sign > 0 ? value : -value;
    }

    /// Component at an arbitrary (not necessarily canonical) multi-index.
    [[nodiscard]] MultiPoly component(MultiIndex idx) const {
        const auto [canon, sign] = canonical(std::move(idx));
        if (sign == 0) return MultiPoly(n_);
        auto it = comps_.find(canon);
        if (it == comps_.end()) return MultiPoly(n_);
        return sign > 0 ? it->second : -it->second;
    }

    [[nodiscard]] int max_degree() const {
        int d = -1;
        for (const auto& [i, p] : comps_) d = std::max(d, p.total_degree());
        return d;
    }

    /// All canonical multi-indices for this field's shape.
    [[nodiscard]] std::vector<MultiIndex> shape() const {
        std::vector<MultiIndex> out;
        MultiIndex cur;
        const bool strict = kind_ == FieldKind::Alternating;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (cur.size() == valence_) {
                out.push_back(cur);
                return;
            }
            for (std::size_t i = start; i < n_; ++i) {
                cur.push_back(i);
                self(self, strict ? i + 1 : i);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    }

   private:
    [[nodiscard]] std::pair<MultiIndex, int> canonical(MultiIndex idx) const {
        if (idx.size() != valence_) throw std::invalid_argument("PolyTensorField: wrong number of indices");
        for (auto i : idx)
            if (i >= n_) throw std::out_of_range("PolyTensorField: index out of range");
        if (kind_ == FieldKind::Alternating) {
            int sign = 1;
            for (std::size_t i = 1; i < idx.size(); ++i)
                for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
                    std::swap(idx[j - 1], idx[j]);
                    sign = -sign;
                }
            if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) sign = 0;
            return {idx, sign};
        }
        if (kind_ == FieldKind::Symmetric) std::sort(idx.begin(), idx.end());
        return {idx, 1};
    }

    FieldKind kind_;
    std::size_t n_;
    std::size_t valence_;
    std::map<MultiIndex, MultiPoly> comps_;
};

/// A nonzero component of an operator applied to a field.
struct Residual {
    MultiIndex index;
    MultiPoly value;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

inline void push_nonzero(std::vector<Residual>& out, MultiIndex idx, MultiPoly value) {
    if (!value.is_zero()) out.push_back({std::move(idx), std::move(value)});
}

inline std::vector<MultiIndex> multisets(std::size_t n, std::size_t k) {
    PolyTensorField shape_only(FieldKind::Symmetric, n, k);
    return shape_only.shape();
}

}  // namespace detail

/// Full symmetrization of d_a psi_{b1..bk}, up to the positive factor
/// 1/(k+1)!: for each multiset M, sum over distinct a in M of mult(a) d_a psi_{M-a}.
inline std::vector<Residual> killing_residuals(const PolyTensorField& psi) {
    detail::require(psi.kind() == FieldKind::Symmetric, "killing_check: expects a symmetric covector field");
    const std::size_t n = psi.dimension();
    const std::size_t k = psi.valence();
    detail::require(n >= 1, "killing_check: needs n >= 1");
    std::vector<Residual> out;
    for (const auto& m : detail::multisets(n, k + 1)) {
        MultiPoly sum(n);
        for (std::size_t pos = 0; pos < m.size(); ++pos) {
            if (pos > 0 && m[pos] == m[pos - 1]) continue;
            const auto mult = static_cast<long>(std::count(m.begin(), m.end(), m[pos]));
            MultiIndex rest = m;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
            sum += psi.component(rest).partial(m[pos]) * Rational(mult);
        }
        detail::push_nonzero(out, m, std::move(sum));
    }
    return out;
}

inline bool killing_check(const PolyTensorField& psi) { return killing_residuals(psi).empty(); }

/// d_a xi_b + d_b xi_a - (2/n) (div xi) g_ab with xi_b = eps_b xi^b.
inline std::vector<Residual> conformal_killing_vector_residuals(const PolyTensorField& xi, const FlatMetric& g) {
    detail::require(xi.kind() == FieldKind::Vector, "conformal_killing_vector_check: expects a vector field");
    const std::size_t n = xi.dimension();
    detail::require(g.dimension() == n, "conformal_killing_vector_check: metric dimension mismatch");
    detail::require(n >= 2, "conformal_killing_vector_check: needs n >= 2");
    MultiPoly div(n);
    for (std::size_t c = 0; c < n; ++c) div += xi.component({c}).partial(c);
    std::vector<Residual> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            MultiPoly r = xi.component({b}).partial(a) * Rational(g.eps[b]) + xi.component({a}).partial(b) * Rational(g.eps[a]);
            if (a == b) r -= div * Rational(2 * g.eps[a], static_cast<long>(n));
            detail::push_nonzero(out, {a, b}, std::move(r));
        }
    return out;
}

inline bool conformal_killing_vector_check(const PolyTensorField& xi, const FlatMetric& g) {
    return conformal_killing_vector_residuals(xi, g).empty();
}

/// d_a phi_B - 1/(r+1) (d phi)_{aB} - 1/(n-r+1) sum_j (-1)^j g_{a b_j} C_{B-b_j},
/// where C_{c_2..c_r} = g^{cc} d_c phi_{c c_2..c_r}. This is the standard
/// decomposition of the derivative of a form into its exterior part, its
/// trace part, and the conformal Killing remainder.
inline std::vector<Residual> conformal_killing_form_residuals(const PolyTensorField& phi, const FlatMetric& g) {
    detail::require(phi.kind() == FieldKind::Alternating, "conformal_killing_form_check: expects an alternating field");
    const std::size_t n = phi.dimension();
    const std::size_t r = phi.valence();
    detail::require(g.dimension() == n, "conformal_killing_form_check: metric dimension mismatch");
    detail::require(r >= 1 && r + 1 <= n, "conformal_killing_form_check: rank out of range");

    // Contraction C on (r-1)-multi-indices, cached by canonical index.
    std::map<MultiIndex, MultiPoly> contraction;
    const auto contract = [&](const MultiIndex& rest) -> const MultiPoly& {
        auto it = contraction.find(rest);
        if (it != contraction.end()) return it->second;
        MultiPoly c(n);
        for (std::size_t s = 0; s < n; ++s) {
            MultiIndex idx{s};
            idx.insert(idx.end(), rest.begin(), rest.end());
            c += phi.component(idx).partial(s) * Rational(g.eps[s]);
        }
        return contraction.emplace(rest, std::move(c)).first->second;
    };

    std::vector<Residual> out;
    const Rational ext_coeff(1, static_cast<long>(r + 1));
    const Rational trace_coeff(1, static_cast<long>(n - r + 1));
    for (std::size_t a = 0; a < n; ++a) {
        for (const auto& b : phi.shape()) {
            const MultiPoly direct = phi.component(b).partial(a);
            MultiPoly dphi = direct;
            for (std::size_t j = 0; j < r; ++j) {
                MultiIndex idx = b;
                idx[j] = a;
                // (-1)^{j+1} d_{b_j} phi_{a, b - b_j}, and phi_{a, b - b_j} = (-1)^j phi_idx
                dphi -= phi.component(idx).partial(b[j]);
            }
            MultiPoly trace(n);
            for (std::size_t j = 0; j < r; ++j) {
                if (b[j] != a) continue;
                MultiIndex rest = b;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
                MultiPoly t = contract(rest) * Rational(g.eps[a]);
                if (j % 2 == 1) t = -t;
                trace += t;
            }
            MultiPoly res = direct - dphi * ext_coeff - trace * trace_coeff;
            detail::push_nonzero(out, [&] {
                MultiIndex idx{a};
                idx.insert(idx.end(), b.begin(), b.end());
                return idx;
            }(), std::move(res));
        }
    }
    return out;
}

inline bool conformal_killing_form_check(const PolyTensorField& phi, const FlatMetric& g) {
    return conformal_killing_form_residuals(phi, g).empty();
}

/// d_a d_b sigma - (1/n) g_ab g^{cc} d_c d_c sigma.
inline std::vector<Residual> tracefree_hessian_residuals(const MultiPoly& sigma, const FlatMetric& g) {
    const std::size_t n = sigma.variable_count();
    detail::require(g.dimension() == n, "tracefree_hessian_check: metric dimension mismatch");
    detail::require(n >= 2, "tracefree_hessian_check: needs n >= 2");
    MultiPoly laplace(n);
    for (std::size_t c = 0; c < n; ++c) laplace += sigma.partial(c).partial(c) * Rational(g.eps[c]);
    std::vector<Residual> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            MultiPoly r = sigma.partial(a).partial(b);
            if (a == b) r -= laplace * Rational(g.eps[a], static_cast<long>(n));
            detail::push_nonzero(out, {a, b}, std::move(r));
        }
    return out;
}

inline bool tracefree_hessian_check(const MultiPoly& sigma, const FlatMetric& g) {
    return tracefree_hessian_residuals(sigma, g).empty();
}

/// Every k-fold partial derivative of sigma; nonzero ones are residuals.
inline std::vector<Residual> higher_density_residuals(const MultiPoly& sigma, std::size_t k) {
    detail::require(k >= 1, "higher_density_check: order must be >= 1");
    const std::size_t n = sigma.variable_count();
    std::vector<Residual> out;
    for (const auto& m : detail::multisets(n, k)) {
        MultiPoly d = sigma;
        for (auto v : m) {
            d = d.partial(v);
            if (d.is_zero()) break;
        }
        detail::push_nonzero(out, m, std::move(d));
    }
    return out;
}

inline bool higher_density_check(const MultiPoly& sigma, std::size_t k) {
    return higher_density_residuals(sigma, k).empty();
}

// ---------------------------------------------------------------------------
// Reading solution systems as flat tensor fields.

/// Coordinate indices (zero-based) named by a slot label: every e<i> with
/// 1 <= i <= n, in order of appearance. e0 and e<n+1> carry density weight
/// only and are dropped.
inline MultiIndex coordinate_indices(const std::string& label, std::size_t n) {
    MultiIndex out;
    for (std::size_t pos = 0; pos < label.size(); ++pos) {
        if (label[pos] != 'e') continue;
        std::size_t end = pos + 1;
        while (end < label.size() && label[end] >= '0' && label[end] <= '9') ++end;
        if (end == pos + 1) continue;
        const auto i = static_cast<std::size_t>(std::stoul(label.substr(pos + 1, end - pos - 1)));
        if (i >= 1 && i <= n) out.push_back(i - 1);
        pos = end - 1;
    }
    return out;
}

/// Interprets the slots of a solution system as components of a flat tensor
/// field of the requested kind.
///  - Vector: slot coefficients are the components xi^i.
///  - Symmetric: slots are commutative monomials phi_{i1}...phi_{ik}; the
///    tensor component is coefficient * prod(mult!)/k!.
///  - Alternating: slots are wedges; on conformal geometries the orthonormal
///    tractor frame carries contravariant components, so indices are lowered
///    with eps_I.
///  - Scalar: the single slot.
inline PolyTensorField field_from_solution(const SolutionSystem& sys, FieldKind kind) {
    const std::size_t n = sys.variable_count();
    const auto eps = sys.geometry.signature();
    std::optional<std::size_t> valence;
    std::vector<std::pair<MultiIndex, const MultiPoly*>> entries;
    for (const auto& slot : sys.slots) {
        MultiIndex idx = coordinate_indices(slot.label, n);
        if (valence && *valence != idx.size())
            throw std::invalid_argument("field_from_solution: slots of mixed valence in " + sys.rep);
        valence = idx.size();
        entries.emplace_back(std::move(idx), &slot.poly);
    }
    const std::size_t k = valence.value_or(0);
    if (kind == FieldKind::Scalar && (entries.size() != 1 || k != 0))
        throw std::invalid_argument("field_from_solution: " + sys.rep + " is not a density system");
    if (kind == FieldKind::Vector && k != 1)
        throw std::invalid_argument("field_from_solution: " + sys.rep + " is not a vector system");

    PolyTensorField f(kind, n, k);
    for (const auto& [idx, poly] : entries) {
        MultiPoly value = *poly;
        if (kind == FieldKind::Symmetric) {
            mpz_class num = 1;
            std::size_t run = 1;
            for (std::size_t i = 1; i <= idx.size(); ++i) {
                if (i < idx.size() && idx[i] == idx[i - 1]) {
                    ++run;
                    continue;
                }
                for (std::size_t t = 2; t <= run; ++t) num *= static_cast<unsigned long>(t);
                run = 1;
            }
            mpz_class den = 1;
            for (std::size_t t = 2; t <= k; ++t) den *= static_cast<unsigned long>(t);
            value *= Rational(mpq_class(num, den));
        } else if (kind == FieldKind::Alternating && sys.geometry.is_conformal()) {
            int s = 1;
            for (auto i : idx) s *= eps[i];
            value *= Rational(s);
        }
        MultiPoly prior = f.component(idx);
        f.set(idx, prior + value);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Named operators, as used by the verify subcommand.

enum class OperatorKind { Killing, ConformalKillingVector, ConformalKillingForm, TracefreeHessian, HigherDensity };

struct OperatorSpec {
    OperatorKind kind;
    std::size_t order = 0;  // k for higher-density

    /// "killing", "conformal-killing-vector", "conformal-killing-form",
    /// "tracefree-hessian", "higher-density:K".
    static OperatorSpec parse(const std::string& name) {
        if (name == "killing") return {OperatorKind::Killing};
        if (name == "conformal-killing-vector") return {OperatorKind::ConformalKillingVector};
        if (name == "conformal-killing-form") return {OperatorKind::ConformalKillingForm};
        if (name == "tracefree-hessian") return {OperatorKind::TracefreeHessian};
        const std::string prefix = "higher-density:";
        if (name.rfind(prefix, 0) == 0) {
            const std::string k = name.substr(prefix.size());
            if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos || std::stoul(k) == 0)
                throw std::invalid_argument("operator: higher-density needs a positive order, e.g. higher-density:3");
            return {OperatorKind::HigherDensity, static_cast<std::size_t>(std::stoul(k))};
        }
        throw std::invalid_argument("operator: unknown name '" + name + "'");
    }

    [[nodiscard]] std::string str() const {
        switch (kind) {
            case OperatorKind::Killing:
                return "killing";
            case OperatorKind::ConformalKillingVector:
                return "conformal-killing-vector";
            case OperatorKind::ConformalKillingForm:
                return "conformal-killing-form";
            case OperatorKind::TracefreeHessian:
                return "tracefree-hessian";
            case OperatorKind::HigherDensity:
                return "higher-density:" + std::to_string(order);
        }
        return {};
    }
};

inline FieldKind field_kind_for(OperatorKind op) {
    switch (op) {
        case OperatorKind::Killing:
            return FieldKind::Symmetric;
        case OperatorKind::ConformalKillingVector:
            return FieldKind::Vector;
        case OperatorKind::ConformalKillingForm:
            return FieldKind::Alternating;
        default:
            return FieldKind::Scalar;
    }
}

inline std::vector<Residual> apply_operator(const OperatorSpec& op, const PolyTensorField& field, const FlatMetric& g) {
    switch (op.kind) {
        case OperatorKind::Killing:
            return killing_residuals(field);
        case OperatorKind::ConformalKillingVector:
            return conformal_killing_vector_residuals(field, g);
        case OperatorKind::ConformalKillingForm:
            return conformal_killing_form_residuals(field, g);
        case OperatorKind::TracefreeHessian:
            return tracefree_hessian_residuals(field.component({}), g);
        case OperatorKind::HigherDensity:
            return higher_density_residuals(field.component({}), op.order);
    }
    return {};
}

struct VerifyReport {
    std::string op;
    bool passed = false;
    std::vector<Residual> residuals;
};

inline VerifyReport verify_system(const SolutionSystem& sys, const OperatorSpec& op) {
    const PolyTensorField field = field_from_solution(sys, field_kind_for(op.kind));
    auto residuals = apply_operator(op, field, FlatMetric::of(sys.geometry));
    const bool ok = residuals.empty();
    return {op.str(), ok, std::move(residuals)};
}

// ---------------------------------------------------------------------------
// Completeness: the kernel of an operator on fields with polynomial
// components of degree <= max_degree, by exact linear algebra on coefficients.

struct FieldCoordinates {
    std::vector<std::pair<MultiIndex, Exponent>> axes;

    [[nodiscard]] std::vector<Rational> of(const PolyTensorField& f) const {
        std::map<std::pair<MultiIndex, Exponent>, std::size_t> pos;
        for (std::size_t k = 0; k < axes.size(); ++k) pos.emplace(axes[k], k);
        std::vector<Rational> v(axes.size());
        for (const auto& [idx, poly] : f.components())
            for (const auto& [e, c] : poly.terms()) {
                auto it = pos.find({idx, e});
                if (it == pos.end()) throw std::invalid_argument("FieldCoordinates: field exceeds the degree bound");
                v[it->second] = c;
            }
        return v;
    }
};

struct OperatorKernel {
    FieldCoordinates coordinates;
    std::vector<std::vector<Rational>> basis;
};

/// Kernel of `op` on fields shaped like `prototype` whose components are
/// polynomials of degree <= max_degree.
inline OperatorKernel operator_kernel(const OperatorSpec& op, const PolyTensorField& prototype, const FlatMetric& g,
                                      unsigned max_degree) {
    const std::size_t n = prototype.dimension();
    OperatorKernel out;
    for (const auto& idx : prototype.shape())
        for (const auto& e : monomials_up_to(n, max_degree)) out.coordinates.axes.emplace_back(idx, e);

    std::map<std::pair<MultiIndex, Exponent>, std::size_t> equation;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> columns;
    for (const auto& [idx, e] : out.coordinates.axes) {
        PolyTensorField f(prototype.kind(), n, prototype.valence());
        f.set(idx, MultiPoly::monomial(e, Rational(1)));
        std::vector<std::pair<std::size_t, Rational>> col;
        for (const auto& res : apply_operator(op, f, g))
            for (const auto& [re, c] : res.value.terms()) {
                auto [it, fresh] = equation.try_emplace({res.index, re}, equation.size());
                col.emplace_back(it->second, c);
            }
        columns.push_back(std::move(col));
    }
    RatMatrix m = rat_zero(equation.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [row, c] : columns[j]) m(row, j) += c;
    out.basis = exact_nullspace(m);
    return out;
}

/// Whether span(fields) equals the computed kernel.
inline bool spans_kernel(const OperatorKernel& kernel, std::span<const PolyTensorField> fields) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : fields) rows.push_back(kernel.coordinates.of(f));
    const std::size_t cols = kernel.coordinates.axes.size();
    const std::size_t r_fields = rank(from_rows(rows, cols));
    const std::size_t r_kernel = kernel.basis.size();
    rows.insert(rows.end(), kernel.basis.begin(), kernel.basis.end());
    return r_fields == r_kernel && rank(from_rows(rows, cols)) == r_kernel;
}

}  // namespace bggpoly

#endif
