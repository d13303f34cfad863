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

#ifndef GTC_POLY_HPP
#define GTC_POLY_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gtc/rational.hpp"

namespace gtc {

inline constexpr int kMaxVars = 10;

/// Exponent vector. Variables past the ring's count are always zero, so
/// comparisons may ignore the ring size.
struct Monomial {
    std::array<std::uint16_t, kMaxVars> exp{};
    std::uint16_t deg = 0;

    Monomial() = default;
    Monomial(std::initializer_list<int> exps);

    [[nodiscard]] static Monomial unit(int var);

    [[nodiscard]] bool divides(const Monomial& other) const;
    [[nodiscard]] bool is_one() const { return deg == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

[[nodiscard]] Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b; requires b | a.
[[nodiscard]] Monomial operator/(const Monomial& a, const Monomial& b);
[[nodiscard]] Monomial lcm(const Monomial& a, const Monomial& b);
[[nodiscard]] Monomial gcd(const Monomial& a, const Monomial& b);
[[nodiscard]] bool coprime(const Monomial& a, const Monomial& b);

/// Graded reverse lexicographic comparison; returns <0, 0, >0.
[[nodiscard]] int grevlex_compare(const Monomial& a, const Monomial& b);

/// Polynomial with rational coefficients in a fixed number of variables.
///
/// Terms are kept strictly decreasing in grevlex with no zero coefficients,
/// so structural equality is polynomial equality.
class MultiPoly {
   public:
    struct Term {
        Monomial mono;
        Rational coeff;
    };

    explicit MultiPoly(int nvars = 4);

    [[nodiscard]] static MultiPoly constant(int nvars, const Rational& c);
    [[nodiscard]] static MultiPoly variable(int nvars, int index);
    [[nodiscard]] static MultiPoly monomial(int nvars, const Monomial& m, const Rational& c = 1);
    /// Builds from arbitrary (unsorted, possibly repeated) terms.
    [[nodiscard]] static MultiPoly from_terms(int nvars, std::vector<Term> terms);

    [[nodiscard]] int nvars() const { return nvars_; }
    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    /// -1 for the zero polynomial.
    [[nodiscard]] int total_degree() const;
    [[nodiscard]] bool is_homogeneous() const;
    /// Leading term in grevlex. Requires a nonzero polynomial.
    [[nodiscard]] const Term& leading_term() const;
    [[nodiscard]] Rational coefficient(const Monomial& m) const;
    [[nodiscard]] int degree_in(int var) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator-(MultiPoly a);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

   private:
    void check_ring(const MultiPoly& o) const;

    int nvars_;
    std::vector<Term> terms_;
};

[[nodiscard]] MultiPoly pow(const MultiPoly& p, unsigned exponent);
[[nodiscard]] MultiPoly derivative(const MultiPoly& p, int var);
[[nodiscard]] MultiPoly homogeneous_part(const MultiPoly& p, int degree);
[[nodiscard]] Rational evaluate(const MultiPoly& p, std::span<const Rational> point);

/// Replaces variable i by images[i]; the result lives in the images' ring.
[[nodiscard]] MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images);

/// Scales so the grevlex-leading coefficient is 1 (zero stays zero).
[[nodiscard]] MultiPoly monic(const MultiPoly& p);

/// Exact quotient p / d. Throws DomainError when d does not divide p.
[[nodiscard]] MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& d);

/// Re-embeds p into a ring with `nvars` variables, sending variable i to
/// variable target[i].
[[nodiscard]] MultiPoly rename_variables(const MultiPoly& p, int nvars, std::span<const int> target);

/// Linear form sum(coeffs[i] * x_i) in a ring with coeffs.size() variables.
[[nodiscard]] MultiPoly linear_form(std::span<const Rational> coeffs);
/// Coefficient vector of a linear form (degree <= 1, constant term must vanish).
[[nodiscard]] std::vector<Rational> linear_coefficients(const MultiPoly& p);

/// Splits p by the variables flagged in `outer`: returns the nonzero
/// coefficients (polynomials in the remaining variables, same ring) of the
/// distinct monomials in the outer variables.
[[nodiscard]] std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::span<const bool> outer);

/// Renders with variable names prefix0, prefix1, ... .
[[nodiscard]] std::string to_string(const MultiPoly& p, std::string_view prefix = "x");

/// Parses the polynomial grammar: rational coefficients, '*', '^', '+', '-',
/// parentheses, division by constants, and variables x<i>, z<i>, t<i> (all
/// aliases of the positional variable i). Throws ParseError.
[[nodiscard]] MultiPoly parse_poly(std::string_view text, int nvars = 4);

}  // namespace gtc

#endif
