/*
   Copyright 2026 The gtc Authors

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

#ifndef GTC_RATIONAL_HPP
#define GTC_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace gtc {

using Integer = mpz_class;

/// Exact rational number in lowest terms with positive denominator.
///
/// Thin value wrapper over mpq_class. Every operation returns a canonical
/// Rational, so gmpxx expression templates never leak into calling code.
class Rational {
   public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(static_cast<long>(v)) {}
    explicit Rational(const Integer& v) : q_(v) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "a", "-a" or "a/b" (decimal). Throws ParseError.
    static Rational parse(std::string_view text);

    [[nodiscard]] Integer numerator() const { return q_.get_num(); }
    [[nodiscard]] Integer denominator() const { return q_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_one() const { return q_ == 1; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    [[nodiscard]] std::string to_string() const { return q_.get_str(); }

    Rational& operator+=(const Rational& o) {
        q_ += o.q_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        q_ -= o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        q_ *= o.q_;
        return *this;
    }
    /// Throws DomainError on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_; }

   private:
    mpq_class q_;
};

[[nodiscard]] Rational abs(const Rational& r);
[[nodiscard]] Rational pow(const Rational& base, unsigned exponent);

/// Integer gcd/lcm helpers on arbitrary precision integers.
[[nodiscard]] Integer gcd(const Integer& a, const Integer& b);
[[nodiscard]] Integer lcm(const Integer& a, const Integer& b);

}  // namespace gtc

#endif
