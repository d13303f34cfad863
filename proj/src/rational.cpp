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

#include "gtc/rational.hpp"

#include <cctype>

#include "gtc/error.hpp"

namespace gtc {

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    bool seen_slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '/' && !seen_slash) {
            seen_slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            (seen_slash ? digit_after : digit_before) = true;
        } else {
            throw ParseError("invalid rational literal '" + s + "'");
        }
    }
    if (!digit_before || (seen_slash && !digit_after))
        throw ParseError("invalid rational literal '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("invalid rational literal '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent) {
    Rational out(1);
    Rational b = base;
    while (exponent != 0) {
        if (exponent & 1U) out *= b;
        b *= b;
        exponent >>= 1U;
    }
    return out;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace gtc
