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

#include "gtc/cubic_surface.hpp"
#include "gtc/error.hpp"
#include "gtc/groebner.hpp"
#include "gtc/kronecker.hpp"
#include "gtc/roots.hpp"
#include "oracles.hpp"

using namespace gtc;

namespace {

MultiPoly P(const char* s) { return parse_poly(s); }
std::vector<Rational> pt(std::initializer_list<int> c) { return {c.begin(), c.end()}; }

const char* const k3A2 = "z0*z1*z2-z3^3";
const char* const k4A1 = "z1*z2*z3+z0*z2*z3+z0*z1*z3+z0*z1*z2";

struct Expected {
    const char* poly;
    const char* configuration;
};

// Surfaces singular at [1:0:0:0] (and possibly elsewhere) of many types.
const Expected kAde[] = {
    {k3A2, "3A2"},
    {k4A1, "4A1"},
    {"x0*(x1^2+x2^2+x3^2)+x1*x2*x3", "A1"},
    {"x0*x1*x2+x1^3+x2^3+x3^3", "A2"},
    {"x0*x1*x2+x1^3+x3^3", "2A2"},
    {"x0*x1*x2+x1*x3^2+x2^3+x3^3", "A1+A2"},
    {"x0*x1*x2+x1*x3^2+x2*x3^2+x3^3", "2A1+A2"},
    {"x0*x1*x3+x1^2*x2+x2^2*x3+x3^3", "A4"},
    {"x0*x1*x2+x1*x3^2+x2^3", "A1+A5"},
    {"x0*x3^2+x1^3+x2^3", "D4"},
    {"x0*x1^2+x1*x3^2+x2^2*x3", "D5"},
    {"x0*x1^2+x1*x3^2+x2^3", "E6"},
};

std::vector<MultiPoly> gradient(const MultiPoly& f) {
    std::vector<MultiPoly> g;
    for (int v = 0; v < 4; ++v) g.push_back(derivative(f, v));
    return g;
}

// Tjurina number at p by the truncation oracle on the local ideal.
long oracle_tjurina(const MultiPoly& f, const std::vector<Rational>& p) {
    const MultiPoly g = local_equation(f, p);
    std::vector<MultiPoly> gens{g};
    for (int v = 0; v < 3; ++v) gens.push_back(derivative(g, v));
    return oracle::local_algebra_dim(gens, 3);
}

RatMatrix random_invertible(std::mt19937_64& gen, int n) {
    std::uniform_int_distribution<int> d(-2, 2);
    while (true) {
        RatMatrix g(n, n, Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = d(gen);
        if (oracle::naive_rank(g) == static_cast<std::size_t>(n)) return g;
    }
}

}  // namespace

TEST_CASE("linear factors") {
    CHECK(has_linear_factor(P("x0*(x1*x2-x3^2)")));
    CHECK_FALSE(has_linear_factor(P(k3A2)));
    CHECK(has_linear_factor(P("x1^3+x2^3+x3^3-3*x1*x2*x3")));
    CHECK_FALSE(has_linear_factor(P("x1^3+x2^3+x3^3-6*x1*x2*x3")));
    CHECK(has_linear_factor(P("x0^3")));
    // Three conjugate planes over Q(2^(1/3)).
    CHECK(has_linear_factor(P("x0^3+2*x1^3")));
    CHECK(has_linear_factor(P("x3*(x0^2+x1^2+x2^2+x3^2)")));
    CHECK_THROWS_AS((void)has_linear_factor(P("x0^2")), DomainError);

    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 6; ++trial) {
        const RatMatrix g = random_invertible(gen, 4);
        CHECK(has_linear_factor(linear_change(P("x0*(x1*x2-x3^2)"), g)));
        CHECK_FALSE(has_linear_factor(linear_change(P(k4A1), g)));
    }
}

TEST_CASE("classification of rational double point surfaces") {
    for (const auto& e : kAde) {
        INFO(e.poly);
        const MultiPoly f = P(e.poly);
        const auto rep = classify(f);
        CHECK(rep.cls == SurfaceClass::ade);
        CHECK(rep.configuration == e.configuration);
        REQUIRE(rep.families);
        CHECK(*rep.families == family_counts(e.configuration));
        long total = 0;
        for (const auto& s : rep.singularities) {
            total += static_cast<long>(s.tjurina) * s.orbit_degree;
            REQUIRE(s.point);
            CHECK(evaluate(f, *s.point) == Rational(0));
            for (const auto& d : gradient(f)) CHECK(evaluate(d, *s.point) == Rational(0));
            CHECK(oracle_tjurina(f, *s.point) == s.tjurina);
            CHECK(ade_type_at_point(f, *s.point).type == s.type);
        }
        // Length of the singular scheme from its Hilbert polynomial.
        const auto hp = hilbert_polynomial(Ideal(4, gradient(f)));
        CHECK(hp.degree() == 0);
        CHECK(hp(0) == Rational(total));
    }
}

TEST_CASE("stated singular points of the worked examples") {
    const auto a = classify(P(k3A2));
    REQUIRE(a.singularities.size() == 3);
    CHECK(*a.singularities[0].point == pt({1, 0, 0, 0}));
    CHECK(*a.singularities[1].point == pt({0, 1, 0, 0}));
    CHECK(*a.singularities[2].point == pt({0, 0, 1, 0}));
    for (const auto& s : a.singularities) {
        CHECK(s.type == "A2");
        CHECK(s.corank == 1);
    }
    CHECK(*a.families == std::pair{2, 3});

    const auto b = classify(P(k4A1));
    REQUIRE(b.singularities.size() == 4);
    for (int i = 0; i < 4; ++i) {
        std::vector<Rational> e(4, Rational(0));
        e[i] = 1;
        CHECK(*b.singularities[i].point == e);
        CHECK(b.singularities[i].corank == 0);
    }
    CHECK(*b.families == std::pair{13, 4});
}

TEST_CASE("conjugate singular points") {
    // Cayley cubic on a tetrahedron whose faces are conjugate over Q(2^(1/4)).
    const MultiPoly f = P("x0^3-4*x0*x1*x3-2*x0*x2^2+2*x1^2*x2+4*x2*x3^2");
    const auto rep = classify(f);
    CHECK(rep.cls == SurfaceClass::ade);
    CHECK(rep.configuration == "4A1");
    REQUIRE(rep.singularities.size() == 1);
    CHECK_FALSE(rep.singularities[0].point);
    CHECK(rep.singularities[0].orbit_degree == 4);
    CHECK(rep.singularities[0].type == "A1");
    CHECK(rep.singularities[0].corank == 0);
}

TEST_CASE("local types") {
    const MultiPoly d4 = P("x0*x3^2+x1^3+x2^3");
    const auto s = ade_type_at_point(d4, pt({1, 0, 0, 0}));
    CHECK(s.type == "D4");
    CHECK(s.tjurina == 4);
    CHECK(s.corank == 2);
    CHECK(s.binary_cubic == std::string("distinct"));
    CHECK(ade_type_at_point(P("x0*x1^2+x1*x3^2+x2^2*x3"), pt({1, 0, 0, 0})).binary_cubic == std::string("double"));
    CHECK(ade_type_at_point(P("x0*x1^2+x1*x3^2+x2^3"), pt({1, 0, 0, 0})).binary_cubic == std::string("triple"));

    const auto a2 = ade_type_at_point(P(k3A2), pt({2, 0, 0, 0}));
    CHECK(a2.type == "A2");
    CHECK(a2.tjurina == 2);
    CHECK(*a2.point == pt({1, 0, 0, 0}));
    const auto a1 = ade_type_at_point(P(k4A1), pt({0, 0, 0, 1}));
    CHECK(a1.type == "A1");
    CHECK(a1.tjurina == 1);

    CHECK_THROWS_AS((void)ade_type_at_point(P(k3A2), pt({1, 1, 1, 1})), DomainError);
    CHECK_THROWS_AS((void)ade_type_at_point(P("x1^3+x2^3+x3^3"), pt({1, 0, 0, 0})), DomainError);
}

TEST_CASE("cones over plane cubics") {
    for (const char* f : {"x1^3+x2^3+x3^3", "x1^3+x2^3+x3^3-6*x1*x2*x3"}) {
        INFO(f);
        const auto rep = classify(P(f));
        CHECK(rep.cls == SurfaceClass::simple_elliptic);
        CHECK(rep.configuration == "Ẽ6");
        CHECK_FALSE(rep.families);
        REQUIRE(rep.cone);
        CHECK(rep.cone->smooth);
        CHECK(rep.cone->vertex == pt({1, 0, 0, 0}));
        REQUIRE(rep.singularities.size() == 1);
        CHECK(rep.singularities[0].tjurina == 8);
        CHECK(oracle_tjurina(P(f), pt({1, 0, 0, 0})) == 8);
    }
    const auto x9 = simple_elliptic_check(P("x1^3+x2^2*x3"), pt({1, 0, 0, 0}));
    CHECK_FALSE(x9.smooth);
    CHECK(x9.base == parse_poly("x0^3+x1^2*x2", 3));
    CHECK_THROWS_AS((void)simple_elliptic_check(P(k3A2), pt({1, 0, 0, 0})), DomainError);
}

TEST_CASE("smooth, non-normal and non-integral surfaces") {
    const MultiPoly fermat = P("x0^3+x1^3+x2^3+x3^3");
    const auto rep = classify(fermat);
    CHECK(rep.cls == SurfaceClass::smooth);
    CHECK(rep.configuration == "∅");
    CHECK(*rep.families == std::pair{72, 0});
    CHECK(oracle::brute_hilbert_function(gradient(fermat), 4, 5) == 0);

    for (const char* f : {"t0^2*t2+t1^2*t3", "t0*t1*t2+t0^2*t3+t1^3", "t1^3+t2^3+t1*t2*t3", "t1^3+t2^2*t3"}) {
        INFO(f);
        CHECK(classify(P(f)).cls == SurfaceClass::non_normal);
    }
    CHECK(classify(P("x1^3+x2^3+x3^3-3*x1*x2*x3")).cls == SurfaceClass::non_integral);
    CHECK(classify(P("x0^3")).cls == SurfaceClass::non_integral);
    CHECK(classify(P("x0*x1*x2")).cls == SurfaceClass::non_integral);
    CHECK_THROWS_AS((void)classify(P("x0^2*x1+x2")), DomainError);
}

TEST_CASE("non-normal slice family") {
    CHECK(nonnormal_slice_classify(0, 0, 0) == "X9");
    CHECK(nonnormal_slice_classify(1, 0, 0) == "X8");
    CHECK(nonnormal_slice_classify(-1, 1, 1) == "X7");
    CHECK(nonnormal_slice_classify(1, 1, 1) == "X6");
    CHECK(nonnormal_slice_classify(0, 0, 1) == "X6");
    CHECK(nonnormal_slice_classify(-4, 1, 2) == "X7");
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c) {
                const MultiPoly f = nonnormal_slice_member(a, b, c);
                CHECK(classify(f).cls == SurfaceClass::non_normal);
            }
}

TEST_CASE("determinantal representations") {
    const MultiPoly f = P(k3A2);
    CHECK(verify_detrep(parse_matrix("0,-z3,z0; z1,0,-z3; -z3,z2,0"), f) == Rational(1));
    CHECK(verify_detrep(parse_matrix("0,-z3,z0; z2,0,-z3; -z3,z1,0"), f) == Rational(1));
    CHECK(verify_detrep(parse_matrix("0,z0+z3,z0; z1+z2,0,z1; z2,z3,0"), P(k4A1)) == Rational(1));
    CHECK(verify_detrep(parse_matrix("0,-2*z3,2*z0; z1,0,-z3; -z3,z2,0"), f) == Rational(2));
    CHECK_FALSE(verify_detrep(parse_matrix("0,x0,-x1; -x0,0,x2; x1,-x2,0"), f));
    CHECK_FALSE(verify_detrep(parse_matrix("0,-z3,z0; z1,0,-z3; -z3,z2,0"), P(k4A1)));

    // A representation of an integral ADE surface is stable.
    for (const char* m : {"0,-z3,z0; z1,0,-z3; -z3,z2,0", "0,-z3,z0; z2,0,-z3; -z3,z1,0"})
        CHECK(stability_3x3(parse_matrix(m)).level == StabilityLevel::stable);
    CHECK(stability_3x3(parse_matrix("0,z0+z3,z0; z1+z2,0,z1; z2,z3,0")).level == StabilityLevel::stable);
}

TEST_CASE("admissible configurations") {
    CHECK(allowed_config_validate("2A1+A3"));
    CHECK(allowed_config_validate("A3+A1+A1"));
    CHECK(allowed_config_validate("∅"));
    CHECK(allowed_config_validate("A1+A4"));
    CHECK_FALSE(allowed_config_validate("3A1+A2"));
    CHECK_FALSE(allowed_config_validate("A6"));
    CHECK_FALSE(allowed_config_validate("D6"));
    int count = 0;
    for (const auto& row : table1_reference()) count += allowed_config_validate(row.label);
    CHECK(count == 21);
}

TEST_CASE("classification is invariant under coordinate changes") {
    std::mt19937_64 gen(2026);
    const char* samples[] = {k3A2, "x0*x3^2+x1^3+x2^3", "x0*x1*x3+x1^2*x2+x2^2*x3+x3^3", "x0*x1^2+x1*x3^2+x2^3",
                             "x0^3+x1^3+x2^3+x3^3", "x1^3+x2^3+x3^3-6*x1*x2*x3", "t0^2*t2+t1^2*t3",
                             "x1^3+x2^3+x3^3-3*x1*x2*x3"};
    for (const char* s : samples) {
        INFO(s);
        const auto base = classify(P(s));
        for (int trial = 0; trial < 2; ++trial) {
            const auto moved = classify(linear_change(P(s), random_invertible(gen, 4)));
            CHECK(moved.cls == base.cls);
            CHECK(moved.configuration == base.configuration);
        }
    }
}
