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

#ifndef GTC_GROEBNER_HPP
#define GTC_GROEBNER_HPP

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gtc/matrix.hpp"
#include "gtc/poly.hpp"
#include "gtc/rational.hpp"
#include "gtc/univariate.hpp"

namespace gtc {

/// Monomial order used by the Buchberger engine.
///
/// `elimination` compares the total degree in the flagged variables first
/// and breaks ties by grevlex, so it eliminates the flagged block.
class TermOrder {
   public:
    enum class Kind { grevlex, lex, elimination };

    [[nodiscard]] static TermOrder grevlex() { return TermOrder(Kind::grevlex, {}); }
    [[nodiscard]] static TermOrder lex() { return TermOrder(Kind::lex, {}); }
    [[nodiscard]] static TermOrder elimination(std::span<const bool> eliminated);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] const std::array<bool, kMaxVars>& block() const { return block_; }

    /// <0, 0, >0 as a is smaller, equal, larger than b.
    [[nodiscard]] int compare(const Monomial& a, const Monomial& b) const;
    [[nodiscard]] std::string name() const;

    friend bool operator==(const TermOrder& a, const TermOrder& b) = default;

   private:
    TermOrder(Kind k, std::array<bool, kMaxVars> block) : kind_(k), block_(block) {}
    Kind kind_;
    std::array<bool, kMaxVars> block_;
};

/// Leading term of a nonzero polynomial under `order`.
[[nodiscard]] const MultiPoly::Term& leading_term(const MultiPoly& p, const TermOrder& order);

/// Reduced Groebner basis: monic, interreduced, sorted by increasing
/// leading monomial. The unit ideal is {1}; the zero ideal is empty.
struct GroebnerBasis {
    int nvars = 0;
    TermOrder order = TermOrder::grevlex();
    std::vector<MultiPoly> polys;

    [[nodiscard]] bool is_unit() const { return polys.size() == 1 && polys.front().is_constant(); }
    [[nodiscard]] bool is_zero() const { return polys.empty(); }
    [[nodiscard]] std::vector<Monomial> leading_monomials() const;
};

/// Buchberger's algorithm with the sugar selection strategy, the coprime
/// criterion and the Gebauer-Moeller chain criteria. Zero generators are
/// ignored. All generators must share a ring.
[[nodiscard]] GroebnerBasis groebner_basis(std::span<const MultiPoly> gens, int nvars,
                                           const TermOrder& order = TermOrder::grevlex());

/// Fully reduced remainder of p modulo a Groebner basis.
[[nodiscard]] MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb);

/// Records every basis computed on the current thread while enabled; used by
/// the self-check suites to re-verify the Buchberger criterion.
class GroebnerAudit {
   public:
    static void enable(bool on);
    [[nodiscard]] static bool enabled();
    static void record(const GroebnerBasis& gb);
    /// Returns the recorded bases and clears the log.
    [[nodiscard]] static std::vector<GroebnerBasis> take();
};

/// Ideal of a polynomial ring with its grevlex Groebner basis.
///
/// The basis is computed on construction and shared read-only between copies.
class Ideal {
   public:
    explicit Ideal(int nvars, std::vector<MultiPoly> generators = {});

    [[nodiscard]] int nvars() const { return nvars_; }
    [[nodiscard]] const std::vector<MultiPoly>& generators() const { return gens_; }
    [[nodiscard]] const GroebnerBasis& basis() const { return *gb_; }
    [[nodiscard]] bool is_homogeneous() const { return homogeneous_; }
    [[nodiscard]] bool is_unit() const { return gb_->is_unit(); }
    [[nodiscard]] bool is_zero() const { return gb_->is_zero(); }
    [[nodiscard]] bool contains(const MultiPoly& p) const;
    [[nodiscard]] bool contains(const Ideal& other) const;

    /// Equality of ideals (reduced bases agree).
    friend bool operator==(const Ideal& a, const Ideal& b);

   private:
    int nvars_;
    std::vector<MultiPoly> gens_;
    bool homogeneous_ = true;
    std::shared_ptr<const GroebnerBasis> gb_;
};

using HomIdeal = Ideal;

[[nodiscard]] Ideal ideal_sum(const Ideal& a, const Ideal& b);
[[nodiscard]] Ideal ideal_product(const Ideal& a, const Ideal& b);
/// Ideal generated by the variables.
[[nodiscard]] Ideal irrelevant_ideal(int nvars);

/// Intersection with the subring of the variables not flagged in `vars`.
[[nodiscard]] Ideal eliminate(const Ideal& ideal, std::span<const bool> vars);
[[nodiscard]] Ideal intersection(const Ideal& a, const Ideal& b);
/// I : g. For homogeneous I and g a variable a grevlex basis with g last is
/// divided directly; otherwise (I cap <g>) / g.
[[nodiscard]] Ideal ideal_quotient(const Ideal& ideal, const MultiPoly& g);
/// (I : g) computed only by the intersection route.
[[nodiscard]] Ideal ideal_quotient_by_intersection(const Ideal& ideal, const MultiPoly& g);
/// I : J as the intersection of the quotients by the generators of J.
[[nodiscard]] Ideal ideal_quotient(const Ideal& ideal, const Ideal& j);
/// I : J^infinity by iterating the quotient until it stabilises.
[[nodiscard]] Ideal saturation(const Ideal& ideal, const Ideal& j);
/// Saturation with respect to the irrelevant ideal.
[[nodiscard]] Ideal saturate_irrelevant(const Ideal& ideal);

/// Monic greatest common divisor of two polynomials in one ring, via
/// f * g / lcm(f, g) and lcm from <f> cap <g>. Both zero throws DomainError.
[[nodiscard]] MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g);

/// Hilbert polynomial P(n) with the degree from which it agrees with the
/// Hilbert function.
struct HilbertPoly {
    UniPoly poly;
    int bound = 0;

    [[nodiscard]] int degree() const { return poly.degree(); }
    [[nodiscard]] bool is_zero() const { return poly.is_zero(); }
    [[nodiscard]] Rational operator()(long n) const { return poly(Rational(n)); }
    /// Compact form such as "3n+1" or "(1/6)n^3+n^2+(11/6)n+1".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const HilbertPoly& a, const HilbertPoly& b) { return a.poly == b.poly; }
};

/// Numerator of the Hilbert series of R / <monomials>, as t-polynomial with
/// integer coefficients (denominator (1-t)^n).
[[nodiscard]] UniPoly hilbert_numerator(std::vector<Monomial> monos, int nvars);
/// Hilbert polynomial from the leading-term ideal. Requires a homogeneous ideal.
[[nodiscard]] HilbertPoly hilbert_polynomial(const Ideal& ideal);
/// dim_Q (R/I)_d from the leading-term ideal. Requires a homogeneous ideal.
[[nodiscard]] long hilbert_function(const Ideal& ideal, int degree);
/// Degree of the Hilbert polynomial; -1 when V(I) is empty.
[[nodiscard]] int proj_dimension(const Ideal& ideal);
/// A basis of the homogeneous component I_d.
[[nodiscard]] std::vector<MultiPoly> graded_piece(const Ideal& ideal, int degree);
/// All monomials of the given degree in `nvars` variables, grevlex-decreasing.
[[nodiscard]] std::vector<Monomial> monomials_of_degree(int nvars, int degree);

/// Affine consistency over the algebraic closure (weak Nullstellensatz):
/// false iff the reduced basis is {1}. Field independent.
[[nodiscard]] bool has_solution_over_closure(std::span<const MultiPoly> gens, int nvars);

/// Finite quotient algebra R/I of a zero-dimensional affine ideal.
struct QuotientAlgebra {
    std::vector<Monomial> basis;        ///< standard monomials
    std::vector<RatMatrix> mult;        ///< multiplication matrix of each variable
    [[nodiscard]] std::size_t dim() const { return basis.size(); }
};

/// Throws DomainError when the ideal is not zero-dimensional.
[[nodiscard]] QuotientAlgebra quotient_algebra(const Ideal& ideal);
/// Matrix of multiplication by p on the quotient algebra.
[[nodiscard]] RatMatrix multiplication_matrix(const QuotientAlgebra& qa, const MultiPoly& p);

/// A solution point of a zero-dimensional system: either a rational point or
/// an unsplit set of `count` conjugate (non-rational) points, each with the
/// same local multiplicity.
struct SolutionPoint {
    std::optional<std::vector<Rational>> coords;
    int count = 1;
    int multiplicity = 1;
    /// Basis (in standard-monomial coordinates) of the sum of the local
    /// algebras of the points described.
    std::vector<std::vector<Rational>> subspace;

    [[nodiscard]] bool is_rational() const { return coords.has_value(); }
};

/// Solves a zero-dimensional affine ideal via a separating linear form.
/// Multiplicities sum to the quotient-algebra dimension. Throws DomainError
/// when not zero-dimensional, InconsistencyError when the separating-form
/// search is exhausted.
[[nodiscard]] std::vector<SolutionPoint> zero_dim_solve(const Ideal& ideal);

/// Dehomogenizes p by setting variable `var` to 1; the chart ring has one
/// variable fewer (remaining variables keep their relative order).
[[nodiscard]] MultiPoly dehomogenize(const MultiPoly& p, int var);

/// Solves a homogeneous ideal with finitely many projective zeros chart by
/// chart (x_c = 1 with x_j = 0 for j < c). Rational points are normalized
/// with first nonzero coordinate 1; `chart` records c.
struct ProjectivePoint {
    SolutionPoint solution;
    int chart = 0;
    std::shared_ptr<const QuotientAlgebra> algebra;  ///< algebra of the chart
};
[[nodiscard]] std::vector<ProjectivePoint> projective_solve(const Ideal& ideal);
/// Whether the homogeneous polynomial p vanishes at every point described,
/// decided by nilpotency of multiplication by p on their local algebras.
[[nodiscard]] bool vanishes_at(const ProjectivePoint& point, const MultiPoly& p);

}  // namespace gtc

#endif
