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

#ifndef BGGPOLY_EXACTMATH_MULTIPOLY_HPP
#define BGGPOLY_EXACTMATH_MULTIPOLY_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bggpoly/exactmath/rational.hpp"

namespace bggpoly {

using Exponent = std::vector<unsigned>;

inline unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0U); }

/// Graded-lex, largest first: higher total degree first, ties broken by plain
/// lexicographic comparison with x1 > x2 > ... > xn.
struct GrlexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const {
        const unsigned da = total_degree(a);
        const unsigned db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

/// Polynomial in x1..xn with exact rational coefficients. Zero coefficients are
/// never stored, so equality is plain term-map equality.
class MultiPoly {
   public:
    using Terms = std::map<Exponent, Rational, GrlexDescending>;

    explicit MultiPoly(std::size_t variable_count = 0) : n_(variable_count) {}

    static MultiPoly constant(std::size_t variable_count, const Rational& c) {
        MultiPoly p(variable_count);
        if (!c.is_zero()) p.terms_.emplace(Exponent(variable_count, 0U), c);
        return p;
    }

    /// The coordinate x_{var+1}; `var` is zero-based.
    static MultiPoly variable(std::size_t variable_count, std::size_t var) {
        if (var >= variable_count) throw std::out_of_range("MultiPoly::variable: index out of range");
        Exponent e(variable_count, 0U);
        e[var] = 1;
        return monomial(std::move(e), Rational(1));
    }

    static MultiPoly monomial(Exponent e, const Rational& c) {
        MultiPoly p(e.size());
        if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
        return p;
    }

    [[nodiscard]] std::size_t variable_count() const noexcept { return n_; }
    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }

    [[nodiscard]] bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && bggpoly::total_degree(terms_.begin()->first) == 0);
    }

    /// -1 for the zero polynomial.
    [[nodiscard]] int total_degree() const {
        return terms_.empty() ? -1 : static_cast<int>(bggpoly::total_degree(terms_.begin()->first));
    }

    [[nodiscard]] Rational coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational{} : it->second;
    }

    [[nodiscard]] Rational constant_term() const { return coefficient(Exponent(n_, 0U)); }

    void add_term(const Exponent& e, const Rational& c) {
        if (e.size() != n_) throw std::invalid_argument("MultiPoly: exponent length mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& rhs) {
        check_compatible(rhs);
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& rhs) {
        check_compatible(rhs);
        for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
        return *this;
    }

    MultiPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_compatible(b);
        MultiPoly r(a.n_);
        Exponent e(a.n_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

    /// Exact value at `point`; the point must have one entry per variable.
    [[nodiscard]] Rational evaluate(std::span<const Rational> point) const {
        if (point.size() != n_) throw std::invalid_argument("MultiPoly::evaluate: point length mismatch");
        Rational sum;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < n_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
            sum += t;
        }
        return sum;
    }

    /// Formal partial derivative in x_{var+1}.
    [[nodiscard]] MultiPoly partial(std::size_t var) const {
        if (var >= n_) throw std::out_of_range("MultiPoly::partial: variable index out of range");
        MultiPoly r(n_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponent d = e;
            d[var] -= 1;
            r.add_term(d, c * Rational(e[var]));
        }
        return r;
    }

    /// Canonical text: graded-lex descending, e.g. "1/2*x1^2 - x2". Zero is "0".
    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool negative = c.sign() < 0;
            const Rational mag = negative ? -c : c;
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < n_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "x" + std::to_string(i + 1);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) {
                out += mag.str();
            } else if (mag.is_one()) {
                out += mono;
            } else {
                out += mag.str() + "*" + mono;
            }
        }
        return out;
    }

    /// Inverse of str(); also tolerates missing spaces around + and -.
    static MultiPoly parse(std::string_view text, std::size_t variable_count) {
        MultiPoly result(variable_count);
        std::size_t pos = 0;
        const auto skip_ws = [&] {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        };
        const auto fail = [&](const std::string& why) {
            throw std::invalid_argument("MultiPoly::parse: " + why + " in '" + std::string(text) + "'");
        };
        const auto read_digits = [&] {
            const std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) fail("expected digits");
            return text.substr(start, pos - start);
        };

        skip_ws();
        if (pos == text.size()) fail("empty input");
        bool first = true;
        while (true) {
            skip_ws();
            if (pos == text.size()) break;
            bool negative = false;
            if (text[pos] == '+' || text[pos] == '-') {
                negative = text[pos] == '-';
                ++pos;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;

            Rational coeff(1);
            Exponent e(variable_count, 0U);
            bool have_factor = false;
            bool bare_constant = false;
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                std::string num(read_digits());
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    num += "/" + std::string(read_digits());
                }
                coeff = Rational::parse(num);
                have_factor = true;
                skip_ws();
                if (pos < text.size() && text[pos] == '*') {
                    ++pos;
                    skip_ws();
                } else {
                    bare_constant = true;
                }
            }
            while (!bare_constant) {
                if (pos >= text.size() || text[pos] != 'x') fail("expected variable");
                ++pos;
                const auto idx = std::stoul(std::string(read_digits()));
                if (idx == 0 || idx > variable_count) fail("variable index out of range");
                unsigned power = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    power = static_cast<unsigned>(std::stoul(std::string(read_digits())));
                }
                e[idx - 1] += power;
                have_factor = true;
                skip_ws();
                if (pos < text.size() && text[pos] == '*') {
                    ++pos;
                    skip_ws();
                    continue;
                }
                break;
            }
            if (!have_factor) fail("empty term");
            result.add_term(e, negative ? -coeff : coeff);
        }
        return result;
    }

   private:
    void check_compatible(const MultiPoly& other) const {
        if (other.n_ != n_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    }

    std::size_t n_;
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

inline Rational evaluate(const MultiPoly& p, std::span<const Rational> point) { return p.evaluate(point); }
inline MultiPoly partial(const MultiPoly& p, std::size_t var) { return p.partial(var); }

/// All exponent vectors in n variables with total degree <= max_degree, in
/// graded-lex descending order.
inline std::vector<Exponent> monomials_up_to(std::size_t n, unsigned max_degree) {
    std::vector<Exponent> out;
    Exponent e(n, 0U);
    // Enumerate by recursion on the first variable.
    auto rec = [&](auto&& self, std::size_t var, unsigned budget) -> void {
        if (var == n) {
            out.push_back(e);
            return;
        }
        for (unsigned k = 0; k <= budget; ++k) {
            e[var] = k;
            self(self, var + 1, budget - k);
        }
        e[var] = 0;
    };
    rec(rec, 0, max_degree);
    std::sort(out.begin(), out.end(), GrlexDescending{});
    return out;
}

}  // namespace bggpoly

#endif
