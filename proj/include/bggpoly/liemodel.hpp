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

#ifndef BGGPOLY_LIEMODEL_HPP
#define BGGPOLY_LIEMODEL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bggpoly/exactmath/matrix.hpp"

namespace bggpoly {

/// Which |1|-graded geometry a model realizes: oriented projective structures
/// in dimension n (sl(n+1)) or conformal structures of signature (p,q)
/// (so(p+1,q+1)).
class GeometryKind {
   public:
    enum class Family { Projective, Conformal };

    static GeometryKind projective(std::size_t n) {
        if (n < 2) throw std::invalid_argument("projective geometry needs n >= 2");
        return GeometryKind(Family::Projective, n, n);
    }

    static GeometryKind conformal(std::size_t p, std::size_t q) {
        if (p + q < 2) throw std::invalid_argument("conformal geometry needs p + q >= 2");
        return GeometryKind(Family::Conformal, p + q, p);
    }

    /// "projective:N" or "conformal:P,Q".
    static GeometryKind parse(std::string_view text) {
        const auto colon = text.find(':');
        if (colon == std::string_view::npos) throw std::invalid_argument("geometry: expected 'projective:N' or 'conformal:P,Q'");
        const std::string family(text.substr(0, colon));
        const std::string args(text.substr(colon + 1));
        const auto to_size = [&](const std::string& s) {
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("geometry: malformed integer '" + s + "'");
            return static_cast<std::size_t>(std::stoul(s));
        };
        if (family == "projective") return projective(to_size(args));
        if (family == "conformal") {
            const auto comma = args.find(',');
            if (comma == std::string::npos) throw std::invalid_argument("geometry: conformal needs 'P,Q'");
            return conformal(to_size(args.substr(0, comma)), to_size(args.substr(comma + 1)));
        }
        throw std::invalid_argument("geometry: unknown family '" + family + "'");
    }

    [[nodiscard]] Family family() const noexcept { return family_; }
    [[nodiscard]] bool is_projective() const noexcept { return family_ == Family::Projective; }
    [[nodiscard]] bool is_conformal() const noexcept { return family_ == Family::Conformal; }
    /// Manifold dimension n, which is also the number of normal coordinates.
    [[nodiscard]] std::size_t dimension() const noexcept { return n_; }
    [[nodiscard]] std::size_t p() const noexcept { return p_; }
    [[nodiscard]] std::size_t q() const noexcept { return n_ - p_; }

    /// eps_i = +1 for i <= p and -1 afterwards; all +1 for projective models.
    [[nodiscard]] std::vector<int> signature() const {
        std::vector<int> eps(n_, 1);
        for (std::size_t i = p_; i < n_; ++i) eps[i] = -1;
        return eps;
    }

    [[nodiscard]] std::string str() const {
        if (is_projective()) return "projective:" + std::to_string(n_);
        return "conformal:" + std::to_string(p()) + "," + std::to_string(q());
    }

    friend bool operator==(const GeometryKind&, const GeometryKind&) = default;

   private:
    GeometryKind(Family f, std::size_t n, std::size_t p) : family_(f), n_(n), p_(p) {}

    Family family_;
    std::size_t n_;
    std::size_t p_;
};

/// Matrix realization of g with its grading element and a basis of g_{-1}.
struct GradedLieModel {
    GeometryKind kind;
    std::size_t ambient_dim;
    std::vector<RatMatrix> generators;  // basis B_1..B_n of g_{-1}
    RatMatrix grading_element;
    std::optional<RatMatrix> form;  // invariant Gram matrix J, conformal only
    std::vector<int> signature;     // eps_1..eps_n, conformal only
};

/// sl(n+1): B_i = E_{i0}, so B_i e_0 = e_i; E = diag(n, -1, ..., -1)/(n+1).
inline GradedLieModel build_projective(std::size_t n) {
    const auto kind = GeometryKind::projective(n);
    const std::size_t d = n + 1;
    GradedLieModel m{kind, d, {}, rat_zero(d, d), std::nullopt, {}};
    for (std::size_t i = 1; i <= n; ++i) {
        RatMatrix b = rat_zero(d, d);
        b(i, 0) = Rational(1);
        m.generators.push_back(std::move(b));
    }
    m.grading_element(0, 0) = Rational(static_cast<long>(n), static_cast<long>(d));
    for (std::size_t i = 1; i < d; ++i) m.grading_element(i, i) = Rational(-1, static_cast<long>(d));
    return m;
}

/// so(p+1,q+1) in the light-cone basis e_0..e_{n+1} with <e_0,e_{n+1}> = 1 and
/// <e_i,e_i> = eps_i. B_i e_0 = e_i, B_i e_i = -eps_i e_{n+1}; E = diag(1,0,...,0,-1).
inline GradedLieModel build_conformal(std::size_t p, std::size_t q) {
    const auto kind = GeometryKind::conformal(p, q);
    const std::size_t n = kind.dimension();
    const std::size_t d = n + 2;
    GradedLieModel m{kind, d, {}, rat_zero(d, d), rat_zero(d, d), kind.signature()};
    RatMatrix& j = *m.form;
    j(0, d - 1) = Rational(1);
    j(d - 1, 0) = Rational(1);
    for (std::size_t i = 1; i <= n; ++i) j(i, i) = Rational(m.signature[i - 1]);
    for (std::size_t i = 1; i <= n; ++i) {
        RatMatrix b = rat_zero(d, d);
        b(i, 0) = Rational(1);
        b(d - 1, i) = Rational(-m.signature[i - 1]);
        m.generators.push_back(std::move(b));
    }
    m.grading_element(0, 0) = Rational(1);
    m.grading_element(d - 1, d - 1) = Rational(-1);
    return m;
}

inline GradedLieModel build_model(const GeometryKind& kind) {
    return kind.is_projective() ? build_projective(kind.dimension()) : build_conformal(kind.p(), kind.q());
}

/// rho(X) = sum_i x_i A_i for constant matrices A_i, entries linear in x.
inline PolyMatrix rho_symbolic(std::span<const RatMatrix> actions, std::size_t dim) {
    const std::size_t n = actions.size();
    PolyMatrix r = poly_zero(dim, dim, n);
    for (std::size_t v = 0; v < n; ++v) {
        const RatMatrix& a = actions[v];
        if (a.rows() != dim || a.cols() != dim) throw std::invalid_argument("rho_symbolic: action has wrong shape");
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                if (!a(i, j).is_zero()) r(i, j) += MultiPoly::variable(n, v) * a(i, j);
    }
    return r;
}

inline PolyMatrix rho_symbolic(const GradedLieModel& model) {
    return rho_symbolic(model.generators, model.ambient_dim);
}

/// Human-readable list of violated model invariants; empty when the model is sound.
inline std::vector<std::string> model_violations(const GradedLieModel& m) {
    std::vector<std::string> out;
    const auto& gens = m.generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string tag = "B" + std::to_string(i + 1);
        if (!(commutator(m.grading_element, gens[i]) == -gens[i])) out.push_back("[E," + tag + "] != -" + tag);
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!commutator(gens[i], gens[j]).is_zero())
                out.push_back("[" + tag + ",B" + std::to_string(j + 1) + "] != 0");
        if (m.kind.is_projective() && !trace(gens[i]).is_zero()) out.push_back("tr " + tag + " != 0");
        if (m.form && !(gens[i].transpose() * *m.form + *m.form * gens[i]).is_zero())
            out.push_back(tag + " does not preserve J");
    }
    if (!is_diagonal(m.grading_element)) out.push_back("E is not diagonal");
    if (m.kind.is_projective() && !trace(m.grading_element).is_zero()) out.push_back("tr E != 0");
    return out;
}

}  // namespace bggpoly

#endif
