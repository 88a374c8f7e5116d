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

#ifndef BGGPOLY_BGGSOLVE_CATALOG_HPP
#define BGGPOLY_BGGSOLVE_CATALOG_HPP

// Hand-transcribed solution lists for the representations with a known
// closed form. These are written out term by term and never go through the
// exponential, so they serve as regression fixtures for it.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bggpoly/bggsolve/homog.hpp"
#include "bggpoly/bggsolve/solve.hpp"
#include "bggpoly/descriptor.hpp"

namespace bggpoly {

enum class FixtureStatus { AsPrinted, SignAdjudicated };

inline const char* to_string(FixtureStatus s) { return s == FixtureStatus::AsPrinted ? "as-printed" : "sign-adjudicated"; }

struct CatalogFixture {
    std::string name;
    std::string family;
    FixtureStatus status = FixtureStatus::AsPrinted;
    SolutionSystem printed;
    SolutionSystem adjudicated;  // equal to printed unless status is SignAdjudicated
};

struct Catalog {
    std::string family_set;
    std::vector<CatalogFixture> fixtures;

    [[nodiscard]] std::vector<SolutionSystem> adjudicated() const {
        std::vector<SolutionSystem> out;
        for (const auto& f : fixtures) out.push_back(f.adjudicated);
        return out;
    }

    [[nodiscard]] std::vector<SolutionSystem> printed() const {
        std::vector<SolutionSystem> out;
        for (const auto& f : fixtures) out.push_back(f.printed);
        return out;
    }
};

namespace detail {

// Accumulates one fixture against the slot layout of a representation.
class FixtureBuilder {
   public:
    FixtureBuilder(const Representation& rep) : rep_(rep) {
        for (auto s : quotient_projection(rep).slots) slots_.push_back(rep.labels[s].text());
    }

    [[nodiscard]] SolutionSystem empty() const {
        SolutionSystem sys{rep_.kind, rep_.descriptor, rep_.depth, {}, {}};
        for (const auto& l : slots_) sys.slots.push_back({l, MultiPoly(rep_.variable_count())});
        return sys;
    }

    void add(SolutionSystem& sys, const std::string& label, const MultiPoly& p) const {
        for (auto& s : sys.slots)
            if (s.label == label) {
                s.poly += p;
                return;
            }
        throw std::logic_error("catalog: " + rep_.descriptor + " has no quotient slot '" + label + "'");
    }

   private:
    const Representation& rep_;
    std::vector<std::string> slots_;
};

inline std::string atom(std::size_t i) { return "e" + std::to_string(i); }
inline std::string dual_atom(std::size_t i) { return "e" + std::to_string(i) + "*"; }

inline std::string wedge_label(const std::vector<std::size_t>& idx) {
    std::string s;
    for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "^" : "") + atom(idx[k]);
    return s;
}

// Increasing subsets of {lo, ..., hi} of size r.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t lo, std::size_t hi, std::size_t r) {
    std::vector<std::vector<std::size_t>> out, raw;
    if (hi + 1 < lo) return out;
    combinations(hi + 1 - lo, r, false, raw);
    for (auto& v : raw) {
        for (auto& i : v) i += lo;
        out.push_back(std::move(v));
    }
    return out;
}

inline std::string index_text(const std::vector<std::size_t>& idx) {
    std::string s;
    for (auto i : idx) s += std::to_string(i);
    return s;
}

inline MultiPoly x(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i - 1); }

// Sorts `idx` into increasing order; returns the permutation sign or 0 on repeats.
inline int wedge_sign(std::vector<std::size_t>& idx) {
    const int s = sort_with_sign(idx);
    return std::adjacent_find(idx.begin(), idx.end()) != idx.end() ? 0 : s;
}

inline CatalogFixture plain(std::string name, std::string family, SolutionSystem sys) {
    return {std::move(name), std::move(family), FixtureStatus::AsPrinted, sys, sys};
}

// --- projective -------------------------------------------------------------

// xi_I and sum_j x_j xi_j ^ xi_J over the grading-0 wedges of ext(r, std).
inline Catalog projective_wedges(const Representation& rep, std::size_t r) {
    const std::size_t n = rep.variable_count();
    const FixtureBuilder b(rep);
    Catalog c{"projective wedge fields", {}};
    for (const auto& idx : subsets(1, n, r)) {
        SolutionSystem s = b.empty();
        b.add(s, wedge_label(idx), MultiPoly::constant(n, Rational(1)));
        c.fixtures.push_back(plain("xi_" + index_text(idx), "constant", std::move(s)));
    }
    for (const auto& rest : subsets(1, n, r - 1)) {
        SolutionSystem s = b.empty();
        for (std::size_t j = 1; j <= n; ++j) {
            std::vector<std::size_t> idx{j};
            idx.insert(idx.end(), rest.begin(), rest.end());
            const int sign = wedge_sign(idx);
            if (sign != 0) b.add(s, wedge_label(idx), x(n, j) * Rational(sign));
        }
        c.fixtures.push_back(plain("sum_j x_j xi_j" + std::string(rest.empty() ? "" : " ^ xi_" + index_text(rest)),
                                   "radial", std::move(s)));
    }
    return c;
}

// phi_i and x_i phi_j - x_j phi_i on ext(2, dual(std)).
inline Catalog projective_covectors(const Representation& rep) {
    const std::size_t n = rep.variable_count();
    const FixtureBuilder b(rep);
    const auto phi = [](std::size_t i) { return dual_atom(0) + "^" + dual_atom(i); };
    Catalog c{"projective Killing covectors", {}};
    for (std::size_t i = 1; i <= n; ++i) {
        SolutionSystem s = b.empty();
        b.add(s, phi(i), MultiPoly::constant(n, Rational(1)));
        c.fixtures.push_back(plain("phi_" + std::to_string(i), "constant", std::move(s)));
    }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            SolutionSystem s = b.empty();
            b.add(s, phi(j), x(n, i));
            b.add(s, phi(i), -x(n, j));
            c.fixtures.push_back(plain("x_" + std::to_string(i) + " phi_" + std::to_string(j) + " - x_" +
                                           std::to_string(j) + " phi_" + std::to_string(i),
                                       "rotation", std::move(s)));
        }
    return c;
}

// Every monomial of degree <= k in x, i.e. every degree-k monomial in X^0..X^n.
inline Catalog projective_densities(const Representation& rep) {
    const std::size_t n = rep.variable_count();
    const FixtureBuilder b(rep);
    const SolutionSystem proto = b.empty();
    if (proto.slots.size() != 1) throw std::logic_error("catalog: density representation with several slots");
    const auto k = static_cast<unsigned>(rep.depth);
    Catalog c{"projective densities", {}};
    for (const auto& e : monomials_up_to(n, k)) {
        SolutionSystem s = proto;
        const MultiPoly m = MultiPoly::monomial(e, Rational(1));
        s.slots.front().poly = m;
        c.fixtures.push_back(plain(m.str(), "homogeneous monomial", std::move(s)));
    }
    return c;
}

// The six families of Killing 2-tensors, phi_ij = phi_i phi_j with i <= j.
inline Catalog projective_killing_tensors(const Representation& rep) {
    const std::size_t n = rep.variable_count();
    const FixtureBuilder b(rep);
    const auto phi = [](std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        return "(" + dual_atom(0) + "^" + dual_atom(i) + ").(" + dual_atom(0) + "^" + dual_atom(j) + ")";
    };
    const auto name = [](const char* pattern, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        std::string s = pattern;
        const std::string vals[] = {std::to_string(i), std::to_string(j), std::to_string(k), std::to_string(l)};
        for (std::size_t p = 0; p < s.size(); ++p)
            if (s[p] >= 'I' && s[p] <= 'L') {
                const std::string v = vals[s[p] - 'I'];
                s.replace(p, 1, v);
                p += v.size() - 1;
            }
        return s;
    };
    Catalog c{"projective Killing 2-tensors", {}};
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) {
            SolutionSystem s = b.empty();
            b.add(s, phi(i, j), MultiPoly::constant(n, Rational(1)));
            c.fixtures.push_back(plain(name("phi_IJ", i, j, 0, 0), "constant", std::move(s)));
        }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
            for (std::size_t k = j + 1; k <= n; ++k) {
                SolutionSystem s = b.empty();
                b.add(s, phi(i, j), x(n, k));
                b.add(s, phi(i, k), -x(n, j));
                c.fixtures.push_back(plain(name("x_K phi_IJ - x_J phi_IK", i, j, k, 0), "linear a", std::move(s)));
            }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t k = j; k <= n; ++k) {
                SolutionSystem s = b.empty();
                b.add(s, phi(i, j), x(n, k));
                b.add(s, phi(j, k), -x(n, i));
                c.fixtures.push_back(plain(name("x_K phi_IJ - x_I phi_JK", i, j, k, 0), "linear b", std::move(s)));
            }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t k = j; k <= n; ++k) {
                SolutionSystem s = b.empty();
                b.add(s, phi(i, i), x(n, j) * x(n, k));
                b.add(s, phi(i, j), -(x(n, i) * x(n, k)));
                b.add(s, phi(i, k), -(x(n, i) * x(n, j)));
                b.add(s, phi(j, k), x(n, i) * x(n, i));
                c.fixtures.push_back(plain(name("x_J x_K phi_II - x_I x_K phi_IJ - x_I x_J phi_IK + x_I^2 phi_JK", i, j, k, 0),
                                           "quadratic a", std::move(s)));
            }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t k = j + 1; k <= n; ++k)
                for (std::size_t l = k; l <= n; ++l) {
                    SolutionSystem s = b.empty();
                    b.add(s, phi(i, j), x(n, k) * x(n, l));
                    b.add(s, phi(i, l), -(x(n, j) * x(n, k)));
                    b.add(s, phi(j, k), -(x(n, i) * x(n, l)));
                    b.add(s, phi(k, l), x(n, i) * x(n, j));
                    c.fixtures.push_back(
                        plain(name("x_K x_L phi_IJ - x_J x_K phi_IL - x_I x_L phi_JK + x_I x_J phi_KL", i, j, k, l),
                              "quadratic b", std::move(s)));
                }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t k = j; k <= n; ++k)
                for (std::size_t l = k + 1; l <= n; ++l) {
                    SolutionSystem s = b.empty();
                    b.add(s, phi(i, k), x(n, j) * x(n, l));
                    b.add(s, phi(i, l), -(x(n, j) * x(n, k)));
                    b.add(s, phi(j, k), -(x(n, i) * x(n, l)));
                    b.add(s, phi(j, l), x(n, i) * x(n, k));
                    c.fixtures.push_back(
                        plain(name("x_J x_L phi_IK - x_J x_K phi_IL - x_I x_L phi_JK + x_I x_K phi_JL", i, j, k, l),
                              "quadratic c", std::move(s)));
                }
    return c;
}

// --- conformal --------------------------------------------------------------

// The printed and the adjudicated last homogeneous coordinate.
inline MultiPoly printed_last_coordinate(const GeometryKind& kind) {
    return signature_quadric(kind) * Rational(1, 2);
}

// X^0..X^{n+1} as the image of the frame s~_0..s~_{n+1} under the projection
// to the density slot, in both variants.
struct DensityFrame {
    std::vector<MultiPoly> printed;
    std::vector<MultiPoly> adjudicated;
};

inline DensityFrame conformal_density_frame(const GeometryKind& kind) {
    const std::size_t n = kind.dimension();
    const auto eps = kind.signature();
    DensityFrame f;
    // Pi(s~_0) is the coefficient of s_{n+1} in s~_0; Pi(s~_i) = eps_i x_i; Pi(s~_{n+1}) = 1.
    f.printed.push_back(printed_last_coordinate(kind));
    f.adjudicated.push_back(-printed_last_coordinate(kind));
    for (std::size_t i = 1; i <= n; ++i) {
        f.printed.push_back(x(n, i) * Rational(eps[i - 1]));
        f.adjudicated.push_back(f.printed.back());
    }
    f.printed.push_back(MultiPoly::constant(n, Rational(1)));
    f.adjudicated.push_back(f.printed.back());
    return f;
}

// Products of k projected frame elements s~_{a_1} ... s~_{a_k}; k = 1 is the
// frame of the standard tractor bundle itself.
inline Catalog conformal_densities(const Representation& rep, std::size_t k) {
    const std::size_t n = rep.variable_count();
    const FixtureBuilder b(rep);
    const SolutionSystem proto = b.empty();
    if (proto.slots.size() != 1) throw std::logic_error("catalog: density representation with several slots");
    const DensityFrame frame = conformal_density_frame(rep.kind);
    Catalog c{k == 1 ? "conformal standard tractor frame" : "conformal densities", {}};
    std::vector<std::vector<std::size_t>> multisets;
    combinations(n + 2, k, true, multisets);
    for (const auto& m : multisets) {
        MultiPoly printed = MultiPoly::constant(n, Rational(1));
        MultiPoly adjudicated = printed;
        std::string name;
        for (auto a : m) {
            printed *= frame.printed[a];
            adjudicated *= frame.adjudicated[a];
            const std::size_t coord = a == 0 ? n + 1 : a == n + 1 ? 0 : a;
            name += (name.empty() ? "" : " ") + ("X^" + std::to_string(coord));
        }
        SolutionSystem ps = proto, as = proto;
        ps.slots.front().poly = printed;
        as.slots.front().poly = adjudicated;
        // frame index 0 is s~_0, whose projection is X^{n+1}
        const bool touched = std::find(m.begin(), m.end(), 0) != m.end();
        CatalogFixture f{name, touched ? "involves X^{n+1}" : "no X^{n+1}",
                         touched ? FixtureStatus::SignAdjudicated : FixtureStatus::AsPrinted, ps, as};
        c.fixtures.push_back(std::move(f));
    }
    return c;
}

// Conformal Killing vector fields on ext(2, std); xi_i is the slot e_i ^ e_{n+1}.
inline Catalog conformal_killing_vectors(const Representation& rep) {
    const std::size_t n = rep.variable_count();
    const auto eps = rep.kind.signature();
    const FixtureBuilder b(rep);
    const auto xi = [n](std::size_t i) { return wedge_label({i, n + 1}); };
    const MultiPoly half_q = printed_last_coordinate(rep.kind);
    Catalog c{"conformal Killing vector fields", {}};
    for (std::size_t i = 1; i <= n; ++i) {
        SolutionSystem s = b.empty();
        b.add(s, xi(i), MultiPoly::constant(n, Rational(1)));
        c.fixtures.push_back(plain("xi_" + std::to_string(i), "translation", std::move(s)));
    }
    {
        SolutionSystem s = b.empty();
        for (std::size_t j = 1; j <= n; ++j) b.add(s, xi(j), x(n, j));
        c.fixtures.push_back(plain("sum_j x_j xi_j", "dilation", std::move(s)));
    }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            SolutionSystem s = b.empty();
            b.add(s, xi(i), x(n, j) * Rational(eps[j - 1]));
            b.add(s, xi(j), x(n, i) * Rational(-eps[i - 1]));
            c.fixtures.push_back(plain("eps_" + std::to_string(j) + " x_" + std::to_string(j) + " xi_" + std::to_string(i) +
                                           " - eps_" + std::to_string(i) + " x_" + std::to_string(i) + " xi_" +
                                           std::to_string(j),
                                       "rotation", std::move(s)));
        }
    for (std::size_t i = 1; i <= n; ++i) {
        SolutionSystem printed = b.empty();
        SolutionSystem adjudicated = b.empty();
        b.add(printed, xi(i), half_q);
        b.add(adjudicated, xi(i), half_q);
        for (std::size_t j = 1; j <= n; ++j) {
            const MultiPoly t = x(n, i) * x(n, j) * Rational(eps[i - 1]);
            b.add(printed, xi(j), t);
            b.add(adjudicated, xi(j), -t);
        }
        c.fixtures.push_back({"1/2 (sum_l eps_l x_l^2) xi_" + std::to_string(i) + " -+ eps_" + std::to_string(i) + " x_" +
                                  std::to_string(i) + " sum_j x_j xi_j",
                              "special conformal", FixtureStatus::SignAdjudicated, printed, adjudicated});
    }
    return c;
}

// Conformal Killing r-forms on ext(r+1, std), r >= 2; phi_I is the slot
// e_{i_1} ^ ... ^ e_{i_r} ^ e_{n+1}.
inline Catalog conformal_killing_forms(const Representation& rep, std::size_t r) {
    const std::size_t n = rep.variable_count();
    const auto eps = rep.kind.signature();
    const FixtureBuilder b(rep);
    // Adds coeff * phi_{idx} for an arbitrary index list.
    const auto add_phi = [&](SolutionSystem& s, std::vector<std::size_t> idx, const MultiPoly& coeff) {
        const int sign = wedge_sign(idx);
        if (sign == 0) return;
        idx.push_back(n + 1);
        b.add(s, wedge_label(idx), coeff * Rational(sign));
    };
    const auto without = [](const std::vector<std::size_t>& idx, std::size_t j) {
        std::vector<std::size_t> out = idx;
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
        return out;
    };
    const MultiPoly half_q = printed_last_coordinate(rep.kind);
    Catalog c{"conformal Killing forms", {}};
    for (const auto& idx : subsets(1, n, r)) {
        SolutionSystem s = b.empty();
        add_phi(s, idx, MultiPoly::constant(n, Rational(1)));
        c.fixtures.push_back(plain("phi_" + index_text(idx), "parallel", std::move(s)));
    }
    for (const auto& rest : subsets(1, n, r - 1)) {
        SolutionSystem s = b.empty();
        for (std::size_t j = 1; j <= n; ++j) {
            std::vector<std::size_t> idx{j};
            idx.insert(idx.end(), rest.begin(), rest.end());
            add_phi(s, idx, x(n, j));
        }
        c.fixtures.push_back(plain("sum_j x_j phi_j" + index_text(rest), "radial", std::move(s)));
    }
    for (const auto& idx : subsets(1, n, r + 1)) {
        SolutionSystem s = b.empty();
        for (std::size_t j = 0; j <= r; ++j) {
            const auto i = idx[j];
            add_phi(s, without(idx, j), x(n, i) * Rational(j % 2 == 0 ? eps[i - 1] : -eps[i - 1]));
        }
        c.fixtures.push_back(plain("sum_j (-1)^(j-1) eps x phi, I = " + index_text(idx), "closed", std::move(s)));
    }
    for (const auto& idx : subsets(1, n, r)) {
        SolutionSystem s = b.empty();
        add_phi(s, idx, r % 2 == 0 ? half_q : -half_q);
        for (std::size_t j = 0; j < r; ++j) {
            const auto i = idx[j];
            // (-1)^{r-j} with j one-based
            const int sign = (r - (j + 1)) % 2 == 0 ? 1 : -1;
            const MultiPoly coeff = x(n, i) * Rational(sign * eps[i - 1]);
            for (std::size_t l = 1; l <= n; ++l) {
                std::vector<std::size_t> term{l};
                const auto rest = without(idx, j);
                term.insert(term.end(), rest.begin(), rest.end());
                add_phi(s, term, coeff * x(n, l));
            }
        }
        c.fixtures.push_back(plain("special, I = " + index_text(idx), "special", std::move(s)));
    }
    return c;
}

}  // namespace detail

/// The transcribed solution list for (geometry, descriptor). Throws
/// std::invalid_argument for pairs without a closed-form list.
inline Catalog catalog(const GeometryKind& kind, const std::string& descriptor) {
    const GradedLieModel model = build_model(kind);
    const Representation rep = build_representation(model, descriptor);
    const std::string& d = rep.descriptor;
    const std::size_t n = kind.dimension();
    const auto uncataloged = [&] {
        return std::invalid_argument("catalog: no transcribed list for " + kind.str() + " " + descriptor);
    };

    if (kind.is_projective()) {
        if (d == "std") return detail::projective_wedges(rep, 1);
        for (std::size_t r = 2; r < n; ++r)
            if (d == "ext(" + std::to_string(r) + ",std)") return detail::projective_wedges(rep, r);
        if (d == "ext(2,dual(std))") return detail::projective_covectors(rep);
        if (d == "dual(std)") return detail::projective_densities(rep);
        if (d.rfind("sym(", 0) == 0 && d.size() > 11 && d.substr(d.size() - 11) == ",dual(std))")
            return detail::projective_densities(rep);
        if (d == "cartanS2L2") return detail::projective_killing_tensors(rep);
        throw uncataloged();
    }

    if (d == "std") return detail::conformal_densities(rep, 1);
    if (d.rfind("sym(", 0) == 0 && d.size() > 5 && d.substr(d.size() - 5) == ",std)") {
        const std::string k = d.substr(4, d.size() - 9);
        if (!k.empty() && k.find_first_not_of("0123456789") == std::string::npos)
            return detail::conformal_densities(rep, std::stoul(k));
    }
    if (d == "ext(2,std)") return detail::conformal_killing_vectors(rep);
    for (std::size_t r = 2; r + 1 <= n; ++r)
        if (d == "ext(" + std::to_string(r + 1) + ",std)") return detail::conformal_killing_forms(rep, r);
    throw uncataloged();
}

/// The displayed closed form of exp(-rho(X)) on the conformal standard
/// representation, bottom-left entry +1/2 sum eps_i x_i^2 as printed.
inline PolyMatrix printed_conformal_exponential(const GeometryKind& kind) {
    if (!kind.is_conformal()) throw std::invalid_argument("printed_conformal_exponential: needs a conformal geometry");
    const std::size_t n = kind.dimension();
    const auto eps = kind.signature();
    PolyMatrix m = poly_identity(n + 2, n);
    for (std::size_t i = 1; i <= n; ++i) {
        m(i, 0) = -detail::x(n, i);
        m(n + 1, i) = detail::x(n, i) * Rational(eps[i - 1]);
    }
    m(n + 1, 0) = detail::printed_last_coordinate(kind);
    return m;
}

}  // namespace bggpoly

#endif
