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

#ifndef BGGPOLY_EXACTMATH_RATIONAL_HPP
#define BGGPOLY_EXACTMATH_RATIONAL_HPP

#include <gmpxx.h>

#include <concepts>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bggpoly {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rational {
   public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

    template <std::integral I, std::integral J>
    Rational(I num, J den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        value_.canonicalize();
    }

    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }
    explicit Rational(const mpz_class& value) : value_(value) {}

    /// Accepts "p/q", "p", optionally signed; surrounding whitespace is ignored.
    static Rational parse(std::string_view text) {
        while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
        while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
        if (text.empty()) throw std::invalid_argument("Rational: empty string");
        const auto slash = text.find('/');
        const auto check_int = [](std::string_view part, bool allow_sign) {
            std::size_t start = 0;
            if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) start = 1;
            if (start >= part.size()) return false;
            for (std::size_t i = start; i < part.size(); ++i)
                if (part[i] < '0' || part[i] > '9') return false;
            return true;
        };
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
        if (!check_int(num, true) || !check_int(den, false))
            throw std::invalid_argument("Rational: malformed number '" + std::string(text) + "'");
        if (num[0] == '+') num.remove_prefix(1);
        mpz_class n(std::string(num), 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
        return Rational(mpq_class(n, d));
    }

    /// "p/q", or "p" when the denominator is one.
    [[nodiscard]] std::string str() const {
        if (value_.get_den() == 1) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    [[nodiscard]] const mpq_class& value() const noexcept { return value_; }
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] bool is_zero() const noexcept { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const noexcept { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    Rational& operator-=(const Rational& rhs) {
        value_ -= rhs.value_;
        return *this;
    }
    Rational& operator*=(const Rational& rhs) {
        value_ *= rhs.value_;
        return *this;
    }
    Rational& operator/=(const Rational& rhs) {
        if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= rhs.value_;
        return *this;
    }

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

   private:
    mpq_class value_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// 1/k! as an exact rational.
inline Rational inverse_factorial(unsigned k) {
    mpz_class f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return Rational(mpq_class(mpz_class(1), f));
}

}  // namespace bggpoly

#endif
