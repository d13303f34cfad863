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
#include "gtc/kronecker.hpp"
#include "oracles.hpp"

using namespace gtc;

namespace {

constexpr std::uint64_t kSeed = 0x5eed2026;

PolyMatrix M(const char* s) { return parse_matrix(s); }
MultiPoly P(const char* s) { return parse_poly(s); }

const char* const kKoszul = "0,x0,-x1; -x0,0,x2; x1,-x2,0";
const char* const k3A2 = "0,-z3,z0; z1,0,-z3; -z3,z2,0";

struct Rng {
    std::mt19937_64 gen{kSeed};
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
    MultiPoly linear(int lo = -3, int hi = 3, int zero_percent = 0) {
        std::vector<Rational> c;
        for (int w = 0; w < 4; ++w) c.emplace_back(uniform(0, 99) < zero_percent ? 0 : uniform(lo, hi));
        return linear_form(c);
    }
    PolyMatrix matrix(std::size_t r, std::size_t c, int zero_percent = 0) {
        PolyMatrix m(r, c, MultiPoly(4));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = linear(-3, 3, zero_percent);
        return m;
    }
    RatMatrix invertible(std::size_t n) {
        while (true) {
            RatMatrix g(n, n, Rational(0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) g(i, j) = uniform(-2, 2);
            if (oracle::naive_rank(g) == n) return g;
        }
    }
};

PolyMatrix act(const RatMatrix& g, const PolyMatrix& a, const RatMatrix& h) { return lift(g, 4) * a * lift(h, 4); }

// Random matrix with the zeros of the display forced.
PolyMatrix planted(Rng& rng, std::string_view display) {
    PolyMatrix a = rng.matrix(3, 3);
    std::size_t r = 0;
    std::size_t c = 0;
    for (char ch : display) {
        if (ch == ';') {
            ++r;
            c = 0;
        } else if (ch == ',') {
            ++c;
        } else if (ch == '0') {
            a(r, c) = MultiPoly(4);
        }
    }
    return a;
}

void check_witness(const PolyMatrix& a, const StabilityVerdict& v) {
    if (!v.witness) return;
    REQUIRE(v.pattern);
    CHECK(oracle::naive_rank(v.witness->left) == v.witness->left.rows());
    CHECK(oracle::naive_rank(v.witness->right) == v.witness->right.rows());
    CHECK(matches_pattern(act(v.witness->left, a, v.witness->right), *v.pattern));
}

// Binary forms in (s, t) from a0 * (s, t): a common projective zero of the
// 2x2 minors, decided by the Hilbert polynomial of the minor ideal.
bool lower_left_oracle(const PolyMatrix& a0) {
    PolyMatrix img(3, 4, MultiPoly(2));
    for (std::size_t r = 0; r < 3; ++r)
        for (int w = 0; w < 4; ++w)
            for (std::size_t j = 0; j < 2; ++j)
                img(r, w) += MultiPoly::variable(2, static_cast<int>(j)) * linear_coefficients(a0(r, j))[w];
    return proj_dimension(Ideal(2, two_by_two_minors(img))) >= 0;
}

bool rows_dependent_oracle(const PolyMatrix& a) {
    RatMatrix m(a.rows(), a.cols() * 4, Rational(0));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (int w = 0; w < 4; ++w) m(r, j * 4 + w) = linear_coefficients(a(r, j))[w];
    return oracle::naive_rank(m) < a.rows();
}

}  // namespace

TEST_CASE("pattern displays") {
    CHECK(matches_pattern(M("0,x0,x1; 0,x2,x3; 0,x1,x0"), pattern::kZeroColumn));
    CHECK_FALSE(matches_pattern(M(kKoszul), pattern::kZeroColumn));
    CHECK(matches_pattern(M("x0,x1; x2,x3; 0,0"), pattern::kZeroRow32));
    CHECK(matches_pattern(M("x0,x1,x2; 0,0,x3; 0,0,x1"), pattern::kZeroBlock));
    CHECK_THROWS_AS((void)matches_pattern(M("x0,x1; x2,x3"), pattern::kZeroRow32), DomainError);
    CHECK_THROWS_AS(require_linear_matrix(M("x0^2,x1; x2,x3; 0,0"), 3, 2), DomainError);
    CHECK_THROWS_AS(require_linear_matrix(M("1,x1; x2,x3; 0,0"), 3, 2), DomainError);
    CHECK_THROWS_AS((void)semistable_3x2(M(kKoszul)), DomainError);
    CHECK_THROWS_AS((void)stability_3x3(M("x0,x1; x2,x3; 0,0")), DomainError);
}

TEST_CASE("3x2 examples") {
    CHECK(semistable_3x2(M("x0,x1; x1,x2; x2,x3")).level == StabilityLevel::stable);
    CHECK(semistable_3x2(M("x0,0; x1,x0; 0,x1")).level == StabilityLevel::stable);
    const PolyMatrix degenerate = M("x0,x1; x2,x3; 0,0");
    const auto v = semistable_3x2(degenerate);
    CHECK(v.level == StabilityLevel::unstable);
    CHECK(v.pattern == std::string(pattern::kZeroRow32));
    CHECK(v.witness);
    check_witness(degenerate, v);

    const PolyMatrix col = M("x0,x1; 2*x0,x2; -x0,x3");
    const auto w = semistable_3x2(col);
    CHECK(w.pattern == std::string(pattern::kLowerLeft32));
    check_witness(col, w);
}

TEST_CASE("3x2 verdicts against the oracles") {
    Rng rng;
    for (int trial = 0; trial < 60; ++trial) {
        PolyMatrix a0 = rng.matrix(3, 2, 60);
        if (trial % 3 == 0) {
            // plant a column v whose image is in a line
            a0(1, 0) = MultiPoly(4);
            a0(2, 0) = MultiPoly(4);
        }
        if (trial % 5 == 0) a0 = act(rng.invertible(3), a0, rng.invertible(2));
        const auto v = semistable_3x2(a0);
        const bool unstable = rows_dependent_oracle(a0) || lower_left_oracle(a0);
        CHECK((v.level == StabilityLevel::unstable) == unstable);
        CHECK(v.level != StabilityLevel::semistable);
        check_witness(a0, v);
    }
}

TEST_CASE("3x3 examples") {
    CHECK(stability_3x3(M(kKoszul)).level == StabilityLevel::stable);
    CHECK(stability_3x3(M(k3A2)).level == StabilityLevel::stable);
    CHECK(stability_3x3(M("0,-z3,z0; z2,0,-z3; -z3,z1,0")).level == StabilityLevel::stable);

    const PolyMatrix zc = M("0,x0,x1; 0,x2,x3; 0,x1,x0");
    const auto v = stability_3x3(zc);
    CHECK(v.level == StabilityLevel::unstable);
    CHECK(v.pattern == std::string(pattern::kZeroColumn));
    check_witness(zc, v);

    const PolyMatrix diag = M("x0,0,0; 0,x1,0; 0,0,x2");
    const auto d = stability_3x3(diag);
    CHECK(d.level == StabilityLevel::semistable);
    CHECK(d.pattern == std::string(pattern::kColumnIntoLine));
    CHECK(d.proof);
    CHECK(d.witness);
    check_witness(diag, d);

    CHECK(stability_3x3(PolyMatrix(3, 3, MultiPoly(4))).level == StabilityLevel::unstable);
}

TEST_CASE("planted patterns are detected in every orbit") {
    Rng rng;
    const std::pair<std::string_view, StabilityLevel> cases[] = {
        {pattern::kZeroColumn, StabilityLevel::unstable},    {pattern::kZeroRow, StabilityLevel::unstable},
        {pattern::kZeroBlock, StabilityLevel::unstable},     {pattern::kColumnIntoLine, StabilityLevel::semistable},
        {pattern::kRowIntoLine, StabilityLevel::semistable},
    };
    for (const auto& [display, level] : cases)
        for (int trial = 0; trial < 4; ++trial) {
            INFO(display);
            const PolyMatrix lit = planted(rng, display);
            CHECK(matches_pattern(lit, display));
            const PolyMatrix a = act(rng.invertible(3), lit, rng.invertible(3));
            const auto v = stability_3x3(a);
            if (level == StabilityLevel::unstable) {
                CHECK(v.level == level);
            } else {
                CHECK(v.level <= level);
            }
            check_witness(a, v);
            // Literal small-height witness exists for the untransformed matrix.
            const auto lv = stability_3x3(lit);
            CHECK(lv.level == v.level);
            CHECK(lv.witness);
            check_witness(lit, lv);
        }
}

TEST_CASE("verdicts are invariant under the group") {
    Rng rng;
    for (int trial = 0; trial < 12; ++trial) {
        const PolyMatrix a = trial % 2 ? rng.matrix(3, 3, 55) : planted(rng, trial % 4 ? pattern::kRowIntoLine : pattern::kZeroBlock);
        const auto base = stability_3x3(a);
        const auto moved = stability_3x3(act(rng.invertible(3), a, rng.invertible(3)));
        CHECK(base.level == moved.level);
    }
}

TEST_CASE("determinant criterion consistency on random samples") {
    Rng rng;
    int reducible = 0;
    int degenerate = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const PolyMatrix a = rng.matrix(3, 3, trial % 2 ? 70 : 20);
        const auto v = stability_3x3(a);
        const auto d = det_criterion(a);
        check_witness(a, v);
        const MultiPoly det = matrix_det(a);
        if (d == DetVerdict::stable_at_least) CHECK(v.level == StabilityLevel::stable);
        if (d == DetVerdict::semistable_at_least) CHECK(v.level != StabilityLevel::unstable);
        if (v.level == StabilityLevel::semistable) {
            CHECK_FALSE(det.is_zero());
            if (!det.is_zero()) CHECK(has_linear_factor(det));
        }
        if (v.level == StabilityLevel::stable && det.is_zero()) {
            const auto nf = skew_normalize(a);
            CHECK(lift(nf.m, 4) * koszul_matrix(nf.u) == a);
        }
        reducible += d == DetVerdict::semistable_at_least;
        degenerate += d == DetVerdict::inconclusive;
    }
    // The sparse half must exercise the non-generic branches.
    CHECK(reducible > 0);
    CHECK(degenerate > 0);
}

TEST_CASE("det criterion examples") {
    CHECK(det_criterion(M(k3A2)) == DetVerdict::stable_at_least);
    CHECK(det_criterion(M(kKoszul)) == DetVerdict::inconclusive);
    CHECK(det_criterion(M("x0,0,0; 0,x1,0; 0,0,x2")) == DetVerdict::semistable_at_least);
    CHECK(to_string(DetVerdict::semistable_at_least) == "semistable-at-least");
    CHECK(to_string(StabilityLevel::semistable) == "semistable-not-stable");
}

TEST_CASE("rank one factorization") {
    const PolyMatrix sq = M("x0^2,x0*x1; x0*x1,x1^2");
    const auto [v, u] = rank1_factorize(sq);
    CHECK(v == std::vector<MultiPoly>{P("x0"), P("x1")});
    CHECK(u == std::vector<MultiPoly>{P("x0"), P("x1")});

    const std::vector<MultiPoly> v0 = {P("x0"), P("x1+x2"), P("x3")};
    const std::vector<MultiPoly> u0 = {P("x1"), P("x0-x3"), P("x2")};
    PolyMatrix b(3, 3, MultiPoly(4));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) b(i, j) = v0[i] * u0[j];
    const auto [v1, u1] = rank1_factorize(b);
    const Rational s = v1[0].leading_term().coeff / v0[0].leading_term().coeff;
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(v1[i] == v0[i] * s);
        CHECK(u1[i] * s == u0[i]);
    }

    const PolyMatrix adj = matrix_adjugate(M(kKoszul));
    const auto [va, ua] = rank1_factorize(adj);
    PolyMatrix back(3, 3, MultiPoly(4));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) back(i, j) = va[i] * ua[j];
    CHECK(back == adj);
    CHECK(va[0] == P("x2"));
    CHECK(va[1] == P("x1"));
    CHECK(va[2] == P("x0"));

    PolyMatrix with_zero_col = M("x0*x1,0; x1^2,0");
    const auto [vz, uz] = rank1_factorize(with_zero_col);
    CHECK(uz[1].is_zero());
    CHECK(vz[0] * uz[0] == P("x0*x1"));

    CHECK_THROWS_AS((void)rank1_factorize(PolyMatrix(2, 2, MultiPoly(4))), DomainError);
    CHECK_THROWS_AS((void)rank1_factorize(M("x0,x1; x2,x3")), DomainError);
}

TEST_CASE("skew normal form") {
    const auto k = skew_normalize(M(kKoszul));
    CHECK(k.m == identity(3));
    CHECK(k.point == std::vector<Rational>{0, 0, 0, 1});
    CHECK(koszul_matrix(k.u) == M(kKoszul));

    const RatMatrix g = parse_rat_matrix("1,1,0; 0,1,0; 2,0,1");
    const auto kg = skew_normalize(act(g, M(kKoszul), identity(3)));
    CHECK(kg.m == g);
    CHECK(kg.point == k.point);

    Rng rng;
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<MultiPoly> u;
        RatMatrix c(3, 4, Rational(0));
        do {
            u = {rng.linear(), rng.linear(), rng.linear()};
            for (std::size_t i = 0; i < 3; ++i)
                for (int w = 0; w < 4; ++w) c(i, w) = linear_coefficients(u[i])[w];
        } while (oracle::naive_rank(c) < 3);
        const PolyMatrix a = act(rng.invertible(3), koszul_matrix(u), rng.invertible(3));
        CHECK(stability_3x3(a).level == StabilityLevel::stable);
        const auto nf = skew_normalize(a);
        CHECK(lift(nf.m, 4) * koszul_matrix(nf.u) == a);
        CHECK(det(nf.m) != Rational(0));
        for (const auto& f : nf.u) CHECK(evaluate(f, nf.point) == Rational(0));
    }

    CHECK_THROWS_AS((void)skew_normalize(M(k3A2)), DomainError);
    CHECK_THROWS_AS((void)skew_normalize(M("0,x0,x1; 0,x2,x3; 0,x1,x0")), DomainError);
}
