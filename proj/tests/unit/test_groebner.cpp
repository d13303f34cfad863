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

#include <doctest.h>

#include <random>

#include "gtc/error.hpp"
#include "gtc/groebner.hpp"
#include "oracles.hpp"

using namespace gtc;

namespace {

MultiPoly P(const char* s, int n = 4) { return parse_poly(s, n); }

Ideal I(std::initializer_list<const char*> gens, int n = 4) {
    std::vector<MultiPoly> g;
    for (const char* s : gens) g.push_back(P(s, n));
    return Ideal(n, std::move(g));
}

std::vector<MultiPoly> jacobian(const MultiPoly& f) {
    std::vector<MultiPoly> j;
    for (int v = 0; v < f.nvars(); ++v) j.push_back(derivative(f, v));
    return j;
}

const char* kTwistedCubic[] = {"x1^2-x0*x2", "x1*x2-x0*x3", "x2^2-x1*x3"};

}  // namespace

TEST_CASE("reduced bases of small ideals") {
    CHECK(I({"x0", "x1"}).basis().polys == std::vector<MultiPoly>{P("x1"), P("x0")});
    CHECK(I({"x0^2-x0^2"}).is_zero());
    const Ideal tc = I({kTwistedCubic[0], kTwistedCubic[1], kTwistedCubic[2]});
    CHECK(tc.basis().polys.size() == 3);
    CHECK(oracle::buchberger_criterion(tc.basis()));
    CHECK(tc.contains(P("x1^2-x0*x2")));
    CHECK(I({"x0*x1 - 1", "x0"}).is_unit());
}

TEST_CASE("bases satisfy the Buchberger criterion under every order") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coef(-3, 3);
    const std::array<bool, 4> elim{true, false, false, false};
    for (int trial = 0; trial < 12; ++trial) {
        std::uniform_int_distribution<int> ex(0, trial % 2 == 0 ? 2 : 1);
        std::vector<MultiPoly> gens;
        for (int g = 0; g < 3; ++g) {
            std::vector<MultiPoly::Term> terms;
            for (int t = 0; t < 4; ++t) terms.push_back({Monomial{ex(rng), ex(rng), ex(rng), ex(rng)}, coef(rng)});
            gens.push_back(MultiPoly::from_terms(4, terms));
        }
        for (const TermOrder& ord : {TermOrder::grevlex(), TermOrder::lex(), TermOrder::elimination(elim)}) {
            if (ord.kind() != TermOrder::Kind::grevlex && trial % 2 == 0) continue;
            const GroebnerBasis gb = groebner_basis(gens, 4, ord);
            CHECK(oracle::buchberger_criterion(gb));
            for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
        }
    }
}

TEST_CASE("normal form is idempotent and linear") {
    const Ideal tc = I({kTwistedCubic[0], kTwistedCubic[1], kTwistedCubic[2]});
    const MultiPoly p = P("x0^3 + x1*x2*x3 - 2*x2^3");
    const MultiPoly q = P("x3^3 - x0*x1^2");
    const MultiPoly np = normal_form(p, tc.basis());
    CHECK(normal_form(np, tc.basis()) == np);
    CHECK(normal_form(p * Rational(3) + q, tc.basis()) ==
          np * Rational(3) + normal_form(q, tc.basis()));
}

TEST_CASE("quotients, saturation and elimination") {
    CHECK(ideal_quotient(I({"x0*x1"}), P("x0")) == I({"x1"}));
    CHECK(saturation(I({"x0^2", "x0*x1", "x0*x2", "x0*x3"}), irrelevant_ideal(4)) == I({"x0"}));
    CHECK(eliminate(I({"x0-x1^2", "x0-x2"}), std::array<bool, 4>{true, false, false, false}) == I({"x1^2-x2"}));
    CHECK(intersection(I({"x0"}), I({"x1"})) == I({"x0*x1"}));

    // The variable shortcut agrees with the general route.
    const Ideal j = I({"x0^2*x1 - x2^3", "x0*x3^2", "x1^2*x3 - x0*x2*x3"});
    for (int v = 0; v < 4; ++v) {
        const MultiPoly x = MultiPoly::variable(4, v);
        CHECK(ideal_quotient(j, x) == ideal_quotient_by_intersection(j, x));
    }
    const Ideal s = saturate_irrelevant(j);
    CHECK(s.contains(j));
    CHECK(saturate_irrelevant(s) == s);
    // Non-variable quotient on an affine ideal.
    CHECK(ideal_quotient(I({"x0^2 - 1"}, 2), P("x0 - 1", 2)) == I({"x0 + 1"}, 2));
}

TEST_CASE("multivariate gcd") {
    CHECK(poly_gcd(P("(x0+x1)*(x2-x3)^2"), P("(x2-x3)*(x0-x1)")) == P("x2-x3"));
    CHECK(poly_gcd(P("x0^2"), P("x1")) == P("1"));
    CHECK(poly_gcd(MultiPoly(4), P("2*x0")) == P("x0"));
}

TEST_CASE("Hilbert polynomials") {
    const Ideal tc = I({kTwistedCubic[0], kTwistedCubic[1], kTwistedCubic[2]});
    CHECK(hilbert_polynomial(tc).to_string() == "3n+1");
    const HilbertPoly full = hilbert_polynomial(Ideal(4));
    for (long n = 0; n < 6; ++n) CHECK(full(n) == Rational((n + 1) * (n + 2) * (n + 3), 6));
    CHECK(full.to_string() == "(1/6)n^3+n^2+(11/6)n+1");
    CHECK(hilbert_polynomial(I({"x0^2", "x0*x1", "x0*x2", "x1^3"})).to_string() == "3n+1");
    CHECK(hilbert_polynomial(I({"x0", "x1", "x2", "x3"})).is_zero());
    CHECK_THROWS_AS((void)hilbert_polynomial(I({"x0 - 1"})), DomainError);
}

TEST_CASE("Hilbert polynomial agrees with the brute-force Hilbert function") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<MultiPoly> gens;
        const int ngens = 2 + trial % 3;
        for (int g = 0; g < ngens; ++g) {
            const int deg = 1 + (trial + g) % 3;
            std::vector<MultiPoly::Term> terms;
            for (const auto& m : monomials_of_degree(4, deg))
                if (coef(rng) > 0) terms.push_back({m, coef(rng) + 3});
            if (terms.empty()) terms.push_back({monomials_of_degree(4, deg).front(), 1});
            gens.push_back(MultiPoly::from_terms(4, terms));
        }
        const Ideal id(4, gens);
        const HilbertPoly hp = hilbert_polynomial(id);
        for (int d = hp.bound; d <= hp.bound + 3; ++d) {
            CHECK(hp(d) == Rational(oracle::brute_hilbert_function(gens, 4, d)));
            CHECK(hilbert_function(id, d) == oracle::brute_hilbert_function(gens, 4, d));
        }
    }
}

TEST_CASE("projective dimension") {
    CHECK(proj_dimension(Ideal(4, jacobian(P("x0^3+x1^3+x2^3+x3^3")))) == -1);
    CHECK(proj_dimension(Ideal(4, jacobian(P("t1^3+t2^3+t1*t2*t3")))) == 1);
    CHECK(proj_dimension(I({"x0", "x1", "x2"})) == 0);
    CHECK(graded_piece(I({"x0^2", "x0*x1", "x0*x2", "x1^3"}), 2).size() == 3);
}

TEST_CASE("affine consistency") {
    CHECK(has_solution_over_closure(std::vector<MultiPoly>{P("x0^2+1", 1)}, 1));
    CHECK(!has_solution_over_closure(std::vector<MultiPoly>{P("x0", 1), P("x0-1", 1)}, 1));
}

TEST_CASE("zero-dimensional solving") {
    const auto pts = zero_dim_solve(I({"x0^2", "x1", "x2"}, 3));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].coords == std::vector<Rational>{0, 0, 0});
    CHECK(pts[0].multiplicity == 2);

    const auto irr = zero_dim_solve(I({"x0^2-2", "x1 - x0", "x2^2"}, 3));
    REQUIRE(irr.size() == 1);
    CHECK(!irr[0].is_rational());
    CHECK(irr[0].count == 2);
    CHECK(irr[0].multiplicity == 2);

    const auto mixed = zero_dim_solve(I({"(x0-1)*(x0^2-3)*(x0+2)^2", "x1 - x0^2", "x2 + x0"}, 3));
    int total = 0;
    for (const auto& p : mixed) total += p.count * p.multiplicity;
    CHECK(total == 5);

    CHECK_THROWS_AS((void)zero_dim_solve(I({"x0", "x1"}, 3)), DomainError);
}

TEST_CASE("projective solving of the worked example Jacobians") {
    const auto pts = projective_solve(Ideal(4, jacobian(P("z0*z1*z2 - z3^3"))));
    REQUIRE(pts.size() == 3);
    for (const auto& p : pts) {
        CHECK(p.solution.is_rational());
        CHECK(p.solution.multiplicity == 2);
    }
    CHECK(pts[0].solution.coords == std::vector<Rational>{1, 0, 0, 0});
    CHECK(pts[1].solution.coords == std::vector<Rational>{0, 1, 0, 0});
    CHECK(pts[2].solution.coords == std::vector<Rational>{0, 0, 1, 0});

    // Local multiplicity equals the local-algebra dimension oracle.
    const MultiPoly g = dehomogenize(P("z0*z1*z2 - z3^3"), 0);
    std::vector<MultiPoly> tj{g};
    for (int v = 0; v < 3; ++v) tj.push_back(derivative(g, v));
    CHECK(oracle::local_algebra_dim(tj, 3) == 2);

    const auto cayley = projective_solve(Ideal(4, jacobian(P("z1*z2*z3+z0*z2*z3+z0*z1*z3+z0*z1*z2"))));
    REQUIRE(cayley.size() == 4);
    for (const auto& p : cayley) CHECK(p.solution.multiplicity == 1);
}

TEST_CASE("audit log records computed bases") {
    GroebnerAudit::enable(true);
    (void)I({"x0*x1 - x2^2", "x1^3 - x3^3"});
    GroebnerAudit::enable(false);
    const auto log = GroebnerAudit::take();
    CHECK(log.size() == 1);
    CHECK(oracle::buchberger_criterion(log.front()));
}
