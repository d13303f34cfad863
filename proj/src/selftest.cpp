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


#include "gtc/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "gtc/cubic_surface.hpp"
#include "gtc/groebner.hpp"
#include "gtc/kronecker.hpp"
#include "gtc/roots.hpp"
#include "gtc/twisted_cubics.hpp"

namespace gtc {

namespace {

using Point = std::vector<Rational>;

// Collects failed checks of one criterion.
struct Checker {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

MultiPoly P(const char* s) { return parse_poly(s); }

Point unit_point(int i) {
    Point p(4, Rational(0));
    p[static_cast<std::size_t>(i)] = 1;
    return p;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size() && i < 4; ++i) out += (i ? "; " : "") + parts[i];
    if (parts.size() > 4) out += "; ... (" + std::to_string(parts.size()) + " failures)";
    return out;
}

// ---------------------------------------------------------------------------

std::string table_counts(Checker& ck) {
    static const std::pair<const char*, int> golden[] = {
        {"∅", 72},   {"A1", 50},    {"2A1", 34},   {"A2", 30},    {"3A1", 22},    {"A1+A2", 20}, {"A3", 16},
        {"4A1", 13}, {"2A1+A2", 12}, {"A1+A3", 10}, {"2A2", 12},   {"A4", 8},      {"D4", 6},     {"2A1+A3", 5},
        {"A1+2A2", 6}, {"A1+A4", 4}, {"A5", 4},     {"D5", 2},     {"A1+A5", 1},   {"3A2", 2},    {"E6", 0}};
    const auto rows = table1();
    ck.expect(rows.size() == std::size(golden), "expected 21 rows, got " + std::to_string(rows.size()));
    int agree = 0;
    for (std::size_t i = 0; i < rows.size() && i < std::size(golden); ++i) {
        const auto& [label, count] = golden[i];
        const bool ok = normalize_configuration(rows[i].label) == normalize_configuration(label) &&
                        rows[i].computed == count && rows[i].expected == count;
        agree += ok;
        ck.expect(ok, std::string(label) + ": computed " + std::to_string(rows[i].computed) + ", expected " +
                          std::to_string(count));
    }
    return std::to_string(agree) + "/21 rows agree";
}

std::string orbit_profile(Checker& ck) {
    const auto dec = weyl_orbits(embed_subsystem("4A1"));
    std::map<std::pair<std::size_t, bool>, int> profile;
    std::size_t total = 0;
    for (const auto& o : dec.orbits) {
        ++profile[{o.roots.size(), o.effective}];
        total += o.roots.size();
    }
    const std::map<std::pair<std::size_t, bool>, int> expected{{{16, false}, 1}, {{4, false}, 12}, {{2, true}, 4}};
    ck.expect(profile == expected, "unexpected orbit profile");
    ck.expect(total == 72, "orbit sizes sum to " + std::to_string(total));
    return std::to_string(dec.orbits.size()) + " orbits: 1x16, 12x4, 4x2 effective";
}

std::string worked_examples(Checker& ck) {
    const MultiPoly f3a2 = P("z0*z1*z2-z3^3");
    const MultiPoly f4a1 = P("z1*z2*z3+z0*z2*z3+z0*z1*z3+z0*z1*z2");
    const std::pair<const char*, const MultiPoly*> reps[] = {
        {"0,-z3,z0; z1,0,-z3; -z3,z2,0", &f3a2},
        {"0,-z3,z0; z2,0,-z3; -z3,z1,0", &f3a2},
        {"0,z0+z3,z0; z1+z2,0,z1; z2,z3,0", &f4a1},
    };
    for (const auto& [text, f] : reps) {
        const PolyMatrix a = parse_matrix(text);
        const auto scalar = verify_detrep(a, *f);
        ck.expect(scalar && *scalar == Rational(1), std::string("determinant of ") + text);
        ck.expect(stability_3x3(a).level == StabilityLevel::stable, std::string("stability of ") + text);
    }
    struct Case {
        const MultiPoly* f;
        const char* config;
        const char* type;
        int points;
        std::pair<int, int> families;
    };
    for (const Case& c : {Case{&f3a2, "3A2", "A2", 3, {2, 3}}, Case{&f4a1, "4A1", "A1", 4, {13, 4}}}) {
        const SurfaceReport rep = classify(*c.f);
        ck.expect(rep.cls == SurfaceClass::ade && rep.configuration == c.config,
                  std::string("configuration ") + rep.configuration + " instead of " + c.config);
        std::set<Point> found;
        for (const auto& s : rep.singularities) {
            ck.expect(s.type == c.type, "singularity of type " + s.type);
            if (s.point) found.insert(*s.point);
        }
        std::set<Point> expected;
        for (int i = 0; i < c.points; ++i) expected.insert(unit_point(i));
        ck.expect(found == expected, std::string("singular points of ") + c.config);
        ck.expect(rep.families == std::optional(c.families), std::string("families of ") + c.config);
        ck.expect(family_counts(c.config) == c.families, std::string("orbit families of ") + c.config);
    }
    return "3 representations, 2 classifications";
}

std::string normal_form_suite(Checker& ck) {
    for (const auto& nf : normal_forms()) {
        ck.expect(semistable_3x2(nf.matrix).level == StabilityLevel::stable, nf.name + " unstable");
        const CurveIdeal c = minors_ideal(nf.matrix);
        ck.expect(c.hilbert == twisted_cubic_polynomial(), nf.name + " has HP " + c.hilbert.to_string());
    }
    const Point p = unit_point(3);
    for (const char* h : {"x1^3", "x1^3+x2^3+x1*x2*x3"}) {
        const MultiPoly f = P("x0^2*x3") + P(h);
        const CurveIdeal c = non_cm_ideal(f, p, P("x0"));
        ck.expect(c.hilbert == twisted_cubic_polynomial(), std::string("non-CM ") + h + " has HP " + c.hilbert.to_string());
        ck.expect(!is_aCM_curve(c.ideal), std::string("non-CM ") + h + " reported aCM");
        ck.expect(c.ideal == Ideal(4, {P("x0^2"), P("x0*x1"), P("x0*x2"), P(h)}), std::string("ideal for ") + h);
    }
    return "8 aCM forms, 2 non-CM forms";
}

std::string classification_suite(Checker& ck) {
    auto expect_class = [&](const char* f, SurfaceClass cls) {
        const auto got = classify(P(f)).cls;
        ck.expect(got == cls, std::string(f) + " classified " + to_string(got));
    };
    expect_class("x0^3+x1^3+x2^3+x3^3", SurfaceClass::smooth);
    expect_class("x1^3+x2^3+x3^3", SurfaceClass::simple_elliptic);
    expect_class("x1^3+x2^3+x3^3-6*x1*x2*x3", SurfaceClass::simple_elliptic);
    expect_class("x1^3+x2^3+x3^3-3*x1*x2*x3", SurfaceClass::non_integral);
    for (const char* f : {"x0^2*x2+x1^2*x3", "x0*x1*x2+x0^2*x3+x1^3", "x1^3+x2^3+x1*x2*x3", "x1^3+x2^2*x3"})
        expect_class(f, SurfaceClass::non_normal);
    const std::tuple<int, int, int, const char*> slices[] = {
        {0, 0, 0, "X9"}, {1, 0, 0, "X8"}, {-1, 1, 1, "X7"}, {1, 1, 1, "X6"}};
    for (const auto& [a, b, c, label] : slices) {
        const std::string got = nonnormal_slice_classify(a, b, c);
        ck.expect(got == label, "slice (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                                    ") gave " + got);
        ck.expect(classify(nonnormal_slice_member(a, b, c)).cls == SurfaceClass::non_normal,
                  std::string("slice member ") + label + " not non-normal");
    }
    return "4 classes, 4 slice strata";
}

struct RandomSource {
    std::mt19937_64 gen;
    explicit RandomSource(std::uint64_t seed) : gen(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
    MultiPoly linear(int lo, int hi) {
        std::vector<Rational> c;
        for (int w = 0; w < 4; ++w) c.emplace_back(uniform(lo, hi));
        return linear_form(c);
    }
    RatMatrix invertible(int lo, int hi) {
        while (true) {
            RatMatrix g(3, 3, Rational(0));
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) g(i, j) = uniform(lo, hi);
            if (!det(g).is_zero()) return g;
        }
    }
};

std::string stability_properties(Checker& ck, std::uint64_t seed) {
    RandomSource rng(seed);
    int counts[3] = {0, 0, 0};
    for (int s = 0; s < 100; ++s) {
        PolyMatrix a(3, 3, MultiPoly(4));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(i, j) = rng.linear(-3, 3);
        const MultiPoly d = matrix_det(a);
        const StabilityLevel level = stability_3x3(a).level;
        ++counts[static_cast<int>(level)];
        const std::string tag = "sample " + std::to_string(s) + ": ";
        if (!d.is_zero() && !has_linear_factor(d))
            ck.expect(level == StabilityLevel::stable, tag + "irreducible determinant but " + to_string(level));
        if (!d.is_zero()) ck.expect(level != StabilityLevel::unstable, tag + "nonzero determinant but unstable");
        if (level == StabilityLevel::semistable)
            ck.expect(!d.is_zero() && has_linear_factor(d), tag + "semistable-not-stable with irreducible determinant");
    }
    int round_trips = 0;
    while (round_trips < 25) {
        std::vector<MultiPoly> u{rng.linear(-2, 2), rng.linear(-2, 2), rng.linear(-2, 2)};
        RatMatrix coeffs(3, 4, Rational(0));
        for (std::size_t i = 0; i < 3; ++i) {
            const auto c = linear_coefficients(u[i]);
            for (std::size_t w = 0; w < 4; ++w) coeffs(i, w) = c[w];
        }
        if (rank(coeffs) < 3) continue;
        const PolyMatrix a = lift(rng.invertible(-2, 2), 4) * koszul_matrix(u);
        const std::string tag = "skew sample " + std::to_string(round_trips) + ": ";
        ++round_trips;
        ck.expect(stability_3x3(a).level == StabilityLevel::stable, tag + "not stable");
        const SkewNormalForm nf = skew_normalize(a);
        ck.expect(!det(nf.m).is_zero(), tag + "singular M");
        ck.expect(lift(nf.m, 4) * koszul_matrix(nf.u) == a, tag + "A != M K(u)");
        bool on_point = true;
        for (const auto& ui : nf.u) on_point = on_point && evaluate(ui, nf.point).is_zero();
        ck.expect(on_point, tag + "point not on V(u)");
    }
    return std::to_string(counts[2]) + " stable, " + std::to_string(counts[1]) + " semistable-not-stable, " +
           std::to_string(counts[0]) + " unstable of 100; 25 skew round trips";
}

std::string weyl_order(Checker& ck) {
    const auto order = weyl_group_order(embed_subsystem("E6"));
    ck.expect(order == 51840, "order " + std::to_string(order));
    return "|W(E6)| = " + std::to_string(order);
}

// ---------------------------------------------------------------------------
// Groebner self-checks with a plain top-reduction, independent of the engine.

bool reduces_to_zero(MultiPoly p, const GroebnerBasis& gb) {
    while (!p.is_zero()) {
        const auto& lt = leading_term(p, gb.order);
        const MultiPoly* divisor = nullptr;
        for (const auto& g : gb.polys)
            if (leading_term(g, gb.order).mono.divides(lt.mono)) {
                divisor = &g;
                break;
            }
        if (!divisor) return false;
        const auto& dt = leading_term(*divisor, gb.order);
        p -= MultiPoly::monomial(p.nvars(), lt.mono / dt.mono, lt.coeff / dt.coeff) * *divisor;
    }
    return true;
}

bool buchberger_holds(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.polys.size(); ++i)
        for (std::size_t j = i + 1; j < gb.polys.size(); ++j) {
            const auto& a = leading_term(gb.polys[i], gb.order);
            const auto& b = leading_term(gb.polys[j], gb.order);
            if (coprime(a.mono, b.mono)) continue;
            const Monomial l = lcm(a.mono, b.mono);
            const MultiPoly s = MultiPoly::monomial(gb.nvars, l / a.mono, Rational(1) / a.coeff) * gb.polys[i] -
                                MultiPoly::monomial(gb.nvars, l / b.mono, Rational(1) / b.coeff) * gb.polys[j];
            if (!reduces_to_zero(s, gb)) return false;
        }
    return true;
}

// dim (R/I)_d as the number of monomials minus the rank of the multiples.
long graded_dimension(const std::vector<MultiPoly>& gens, int degree) {
    const auto monos = monomials_of_degree(4, degree);
    std::vector<MultiPoly> span;
    for (const auto& g : gens) {
        const int dg = g.total_degree();
        if (dg > degree) continue;
        for (const auto& m : monomials_of_degree(4, degree - dg)) span.push_back(MultiPoly::monomial(4, m) * g);
    }
    if (span.empty()) return static_cast<long>(monos.size());
    RatMatrix rows(span.size(), monos.size(), Rational(0));
    for (std::size_t r = 0; r < span.size(); ++r)
        for (std::size_t c = 0; c < monos.size(); ++c) rows(r, c) = span[r].coefficient(monos[c]);
    return static_cast<long>(monos.size() - rank(rows));
}

MultiPoly random_form(RandomSource& rng, int degree) {
    std::vector<MultiPoly::Term> terms;
    for (const auto& m : monomials_of_degree(4, degree))
        if (rng.uniform(0, 2) == 0) terms.push_back({m, Rational(rng.uniform(-3, 3))});
    MultiPoly f = MultiPoly::from_terms(4, std::move(terms));
    return f.is_zero() ? MultiPoly::monomial(4, monomials_of_degree(4, degree).front()) : f;
}

std::string groebner_checks(Checker& ck, const std::vector<GroebnerBasis>& recorded, std::uint64_t seed) {
    std::set<std::string> seen;
    std::size_t checked = 0;
    for (const auto& gb : recorded) {
        std::string key = gb.order.name() + std::to_string(gb.nvars);
        for (const auto& p : gb.polys) key += "|" + to_string(p);
        if (!seen.insert(std::move(key)).second) continue;
        ++checked;
        ck.expect(buchberger_holds(gb), "basis with " + std::to_string(gb.polys.size()) + " elements fails");
    }

    RandomSource rng(seed ^ 0x9e3779b97f4a7c15ULL);
    // Shapes (degrees of the generators): points, curves, surfaces.
    const std::vector<std::vector<int>> shapes{{2, 2, 2}, {2, 2}, {2, 3}, {2, 2, 3}, {3}};
    for (int s = 0; s < 20; ++s) {
        std::vector<MultiPoly> gens;
        for (int d : shapes[static_cast<std::size_t>(s) % shapes.size()]) gens.push_back(random_form(rng, d));
        const Ideal ideal(4, gens);
        const HilbertPoly hp = hilbert_polynomial(ideal);
        const int reg = std::max(hp.bound, 0);
        for (int n = reg; n <= reg + 3; ++n) {
            const long brute = graded_dimension(gens, n);
            ck.expect(Rational(brute) == hp(n) && brute == hilbert_function(ideal, n),
                      "ideal " + std::to_string(s) + " degree " + std::to_string(n));
        }
    }
    return std::to_string(checked) + " distinct bases verified, 20 Hilbert polynomials";
}

CriterionResult run(int id, std::string title, const std::function<std::string(Checker&)>& body) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    const auto start = std::chrono::steady_clock::now();
    Checker ck;
    try {
        r.detail = body(ck);
    } catch (const std::exception& e) {
        ck.failures.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = ck.failures.empty();
    if (!r.passed) r.detail = join(ck.failures);
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    const bool was_enabled = GroebnerAudit::enabled();
    (void)GroebnerAudit::take();
    GroebnerAudit::enable(true);
    out.push_back(run(1, "Table of representation counts", table_counts));
    out.push_back(run(2, "4A1 orbit profile", orbit_profile));
    out.push_back(run(3, "Worked examples 3A2 and 4A1", worked_examples));
    out.push_back(run(4, "Twisted cubic normal forms", normal_form_suite));
    out.push_back(run(5, "Classification suite", classification_suite));
    out.push_back(run(6, "Stability properties", [seed](Checker& ck) { return stability_properties(ck, seed); }));
    GroebnerAudit::enable(was_enabled);
    const auto recorded = GroebnerAudit::take();
    out.push_back(run(7, "Weyl group order of E6", weyl_order));
    out.push_back(run(8, "Groebner engine self-checks",
                      [&](Checker& ck) { return groebner_checks(ck, recorded, seed); }));

    CriterionResult excluded;
    excluded.id = 9;
    excluded.title = "Euler number of the fourfold family";
    excluded.excluded = true;
    excluded.detail = "not reproduced: outside the scope of this library";
    out.push_back(excluded);
    return out;
}

std::string format_result(const CriterionResult& r, bool with_time) {
    std::ostringstream os;
    os << (r.excluded ? "SKIP" : r.passed ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.title << ": " << r.detail;
    if (with_time && !r.excluded) {
        os.precision(2);
        os << std::fixed << " (" << r.seconds << " s)";
    }
    return os.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed || r.excluded; });
}

}  // namespace gtc
