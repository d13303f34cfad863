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

#ifndef GTC_UNIVARIATE_HPP
#define GTC_UNIVARIATE_HPP

#include <string>
#include <utility>
#include <vector>

#include "gtc/poly.hpp"
#include "gtc/rational.hpp"

namespace gtc {

/// Dense univariate polynomial, coefficients in ascending degree order,
/// trailing zeros stripped.
class UniPoly {
   public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    [[nodiscard]] static UniPoly monomial(int degree, const Rational& c = 1);
    /// t - root
    [[nodiscard]] static UniPoly linear(const Rational& root);

    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
    [[nodiscard]] Rational coeff(int i) const;
    [[nodiscard]] Rational leading() const;
    [[nodiscard]] Rational operator()(const Rational& t) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c);
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    [[nodiscard]] std::string to_string(std::string_view var = "t") const;

   private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder; throws DomainError on a zero divisor.
[[nodiscard]] std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
[[nodiscard]] UniPoly derivative(const UniPoly& p);
[[nodiscard]] UniPoly monic(const UniPoly& p);
/// Monic gcd; throws DomainError when both inputs are zero.
[[nodiscard]] UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Yun's squarefree decomposition: monic pairwise coprime squarefree factors
/// with multiplicities, so that p = lc(p) * prod f_i^{m_i}.
[[nodiscard]] std::vector<std::pair<UniPoly, int>> squarefree(const UniPoly& p);
/// Distinct rational roots (rational root theorem on the primitive integer form).
[[nodiscard]] std::vector<Rational> rational_roots(const UniPoly& p);

/// Conversions to and from single-variable MultiPoly (ring with one variable).
[[nodiscard]] UniPoly to_univariate(const MultiPoly& p);
[[nodiscard]] MultiPoly to_multipoly(const UniPoly& p);

/// gcd and squarefree decomposition phrased on one-variable MultiPoly.
[[nodiscard]] MultiPoly uni_gcd(const MultiPoly& p, const MultiPoly& q);
[[nodiscard]] std::vector<std::pair<MultiPoly, int>> uni_squarefree(const MultiPoly& p);

}  // namespace gtc

#endif
