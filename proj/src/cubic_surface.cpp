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


#include "gtc/cubic_surface.hpp"

#include <algorithm>
#include <array>

#include "gtc/error.hpp"
#include "gtc/groebner.hpp"
#include "gtc/roots.hpp"

namespace gtc {

namespace {

void require_cubic(const MultiPoly& f) {
    if (f.nvars() != 4) throw DomainError("a cubic surface lives in four variables");
    if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != 3)
        throw DomainError("expected a nonzero homogeneous cubic");
}

std::vector<Rational> normalized(std::vector<Rational> p) {
    const auto lead = std::find_if(p.begin(), p.end(), [](const Rational& x) { return !x.is_zero(); });
    if (lead == p.end()) throw DomainError("the zero vector is not a projective point");
    const Rational s = *lead;
    for (auto& x : p) x /= s;
    return p;
}

std::vector<MultiPoly> gradient(const MultiPoly& f) {
    std::vector<MultiPoly> g;
    for (int v = 0; v < f.nvars(); ++v) g.push_back(derivative(f, v));
    return g;
}

// Symmetric matrix of a quadratic form: q = y^t H y / 2.
RatMatrix hessian_of_quadric(const MultiPoly& q) {
    const int n = q.nvars();
    RatMatrix h(n, n, Rational(0));
    for (const auto& t : q.terms()) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            for (int e = 0; e < t.mono.exp[v]; ++e) vs.push_back(v);
        if (vs[0] == vs[1]) {
            h(vs[0], vs[0]) = t.coeff * Rational(2);
        } else {
            h(vs[0], vs[1]) = t.coeff;
            h(vs[1], vs[0]) = t.coeff;
        }
    }
    return h;
}

// Local Tjurina number at the origin of the chart.
int local_tjurina(const MultiPoly& g) {
    std::vector<MultiPoly> gens{g};
    for (const auto& d : gradient(g)) gens.push_back(d);
    for (const auto& s : zero_dim_solve(Ideal(g.nvars(), gens))) {
        if (!s.coords) continue;
        if (std::all_of(s.coords->begin(), s.coords->end(), [](const Rational& x) { return x.is_zero(); }))
            return s.multiplicity;
    }
    throw DomainError("the point is not singular");
}

std::string a_type(int tau) { return "A" + std::to_string(tau); }

std::string type_from_corank(int corank, int tau) {
    switch (corank) {
        case 0:
            if (tau != 1) throw InconsistencyError("nondegenerate singular point with Tjurina number " + std::to_string(tau));
            return "A1";
        case 1: return a_type(tau);
        case 2:
            if (tau < 4) throw InconsistencyError("corank two point with Tjurina number " + std::to_string(tau));
            return tau == 6 ? "E6" : "D" + std::to_string(tau);
        default: throw InconsistencyError("triple point inside a conjugate set");
    }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Rank of the Hessian of f at a set of conjugate points, through vanishing
// of its minors on their local algebras.
int hessian_rank_at(const MultiPoly& f, const ProjectivePoint& pt) {
    PolyMatrix h(4, 4, MultiPoly(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h(i, j) = derivative(derivative(f, i), j);
    for (std::size_t k = 4; k >= 1; --k) {
        const auto idx = subsets(4, k);
        for (const auto& rows : idx)
            for (const auto& cols : idx) {
                const MultiPoly m = matrix_det(submatrix(h, rows, cols));
                if (!m.is_zero() && !vanishes_at(pt, m)) return static_cast<int>(k);
            }
    }
    return 0;
}

const std::vector<std::string>& allowed_configurations() {
    static const std::vector<std::string> list = [] {
        std::vector<std::string> out;
        for (const char* s : {"∅", "A1", "2A1", "A2", "3A1", "A1+A2", "A3", "4A1", "2A1+A2", "A1+A3", "2A2", "A4", "D4",
                              "2A1+A3", "A1+2A2", "A5", "D5", "A1+A5", "3A2", "E6", "A1+A4"})
            out.push_back(normalize_configuration(s));
        return out;
    }();
    return list;
}

}  // namespace

bool has_linear_factor(const MultiPoly& f) {
    require_cubic(f);
    // Chart c: the plane x_c + sum_{j>c} a_j x_j. Variables x0..x3 followed
    // by the parameters a_{c+1}..a_3.
    for (int c = 0; c < 4; ++c) {
        const int params = 3 - c;
        const int n = 4 + std::max(params, 1);
        std::vector<MultiPoly> images;
        for (int v = 0; v < 4; ++v) images.push_back(MultiPoly::variable(n, v));
        MultiPoly solved(n);
        for (int j = c + 1; j < 4; ++j) solved -= MultiPoly::variable(n, 4 + j - c - 1) * MultiPoly::variable(n, j);
        images[c] = solved;
        const MultiPoly rest = substitute(f, images);
        if (rest.is_zero()) return true;
        std::array<bool, kMaxVars> outer{true, true, true, true};
        const auto eqs = coefficients_in(rest, std::span<const bool>(outer.data(), n));
        if (has_solution_over_closure(eqs, n)) return true;
    }
    return false;
}

std::string to_string(SurfaceClass c) {
    switch (c) {
        case SurfaceClass::smooth: return "smooth";
        case SurfaceClass::ade: return "ADE";
        case SurfaceClass::simple_elliptic: return "simple-elliptic";
        case SurfaceClass::non_normal: return "non-normal";
        case SurfaceClass::non_integral: return "non-integral";
    }
    return "";
}

MultiPoly local_equation(const MultiPoly& f, const std::vector<Rational>& point) {
    if (f.nvars() != 4 || point.size() != 4) throw DomainError("expected a point of P^3 and a form in four variables");
    const auto p = normalized(point);
    const auto c = static_cast<std::size_t>(
        std::find_if(p.begin(), p.end(), [](const Rational& x) { return !x.is_zero(); }) - p.begin());
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < 4; ++i) {
        MultiPoly img = MultiPoly::constant(3, p[i]);
        if (i != c) img += MultiPoly::variable(3, static_cast<int>(i < c ? i : i - 1));
        images.push_back(std::move(img));
    }
    return substitute(f, images);
}

SingularPoint ade_type_at_point(const MultiPoly& f, const std::vector<Rational>& p) {
    require_cubic(f);
    const MultiPoly g = local_equation(f, p);
    for (const auto& t : g.terms())
        if (t.mono.deg < 2) throw DomainError("point is not a singular point of the surface");
    const MultiPoly q = homogeneous_part(g, 2);
    if (q.is_zero()) throw DomainError("local quadratic part vanishes");

    SingularPoint sp;
    sp.point = normalized(p);
    sp.tjurina = local_tjurina(g);
    const RatMatrix h = hessian_of_quadric(q);
    sp.corank = 3 - static_cast<int>(rank(h));
    if (sp.corank < 2) {
        sp.type = type_from_corank(sp.corank, sp.tjurina);
        return sp;
    }

    // Cubic term restricted to the kernel plane as a binary form in (s, t).
    const auto ker = kernel(h);
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < 3; ++i)
        images.push_back(MultiPoly::variable(2, 0) * ker[0][i] + MultiPoly::variable(2, 1) * ker[1][i]);
    const MultiPoly b = substitute(homogeneous_part(g, 3), images);
    if (b.is_zero()) throw InconsistencyError("cubic term vanishes on the Hessian kernel");
    auto co = [&](int i) {
        Monomial m;
        m.exp[0] = static_cast<std::uint16_t>(3 - i);
        m.exp[1] = static_cast<std::uint16_t>(i);
        m.deg = 3;
        return b.coefficient(m);
    };
    const Rational a0 = co(0), a1 = co(1), a2 = co(2), a3 = co(3);
    const Rational disc = a1 * a1 * a2 * a2 - Rational(4) * a0 * a2 * a2 * a2 - Rational(4) * a1 * a1 * a1 * a3 -
                          Rational(27) * a0 * a0 * a3 * a3 + Rational(18) * a0 * a1 * a2 * a3;
    // The Hessian covariant vanishes exactly for a triple root.
    const bool triple =
        (a1 * a1 - Rational(3) * a0 * a2).is_zero() && (a1 * a2 - Rational(9) * a0 * a3).is_zero() &&
        (a2 * a2 - Rational(3) * a1 * a3).is_zero();
    auto fail = [&]() {
        throw InconsistencyError("binary cubic pattern " + *sp.binary_cubic + " contradicts Tjurina number " +
                                 std::to_string(sp.tjurina));
    };
    if (triple) {
        sp.binary_cubic = "triple";
        if (sp.tjurina != 6) fail();
        sp.type = "E6";
    } else if (!disc.is_zero()) {
        sp.binary_cubic = "distinct";
        if (sp.tjurina != 4) fail();
        sp.type = "D4";
    } else {
        sp.binary_cubic = "double";
        if (sp.tjurina < 5) fail();
        sp.type = "D" + std::to_string(sp.tjurina);
    }
    return sp;
}

EllipticCone simple_elliptic_check(const MultiPoly& f, const std::vector<Rational>& p) {
    require_cubic(f);
    const MultiPoly g = local_equation(f, p);
    for (const auto& t : g.terms())
        if (t.mono.deg < 3) throw DomainError("local equation is not purely cubic");
    EllipticCone cone;
    cone.vertex = normalized(p);
    cone.base = g;
    cone.smooth = proj_dimension(Ideal(3, gradient(g))) < 0;
    return cone;
}

std::string nonnormal_slice_classify(const Rational& a, const Rational& b, const Rational& c) {
    if (a.is_zero() && b.is_zero() && c.is_zero()) return "X9";
    if (b.is_zero() && c.is_zero()) return "X8";
    const Rational disc = a * b * b + c * c;
    if (disc.is_zero()) return "X7";  // b != 0 here: b = 0 forces c = 0
    return "X6";
}

MultiPoly nonnormal_slice_member(const Rational& a, const Rational& b, const Rational& c) {
    return parse_poly("t1^3 + t2^2*t3") + parse_poly("t1^2*t3") * a + parse_poly("t0*t1*t2") * b +
           parse_poly("t0*t1^2") * c;
}

std::optional<Rational> verify_detrep(const PolyMatrix& a, const MultiPoly& f) {
    if (a.rows() != 3 || a.cols() != 3) throw DomainError("expected a 3x3 matrix");
    require_cubic(f);
    const MultiPoly d = matrix_det(a);
    if (d.is_zero()) return std::nullopt;
    const Rational c = d.leading_term().coeff / f.leading_term().coeff;
    if (d != f * c) return std::nullopt;
    return c;
}

bool allowed_config_validate(std::string_view label) {
    const auto& list = allowed_configurations();
    return std::find(list.begin(), list.end(), normalize_configuration(label)) != list.end();
}

SurfaceReport classify(const MultiPoly& f) {
    require_cubic(f);
    SurfaceReport rep;
    if (has_linear_factor(f)) {
        rep.cls = SurfaceClass::non_integral;
        return rep;
    }
    const Ideal jac(4, gradient(f));
    const int dim = proj_dimension(jac);
    if (dim < 0) {
        rep.cls = SurfaceClass::smooth;
        rep.configuration = "∅";
        rep.families = family_counts("∅");
        return rep;
    }
    if (dim >= 1) {
        rep.cls = SurfaceClass::non_normal;
        rep.notes.push_back("singular locus is a curve");
        return rep;
    }

    std::vector<DynkinComponent> comps;
    for (const auto& pt : projective_solve(jac)) {
        const auto& sol = pt.solution;
        if (sol.coords) {
            const MultiPoly g = local_equation(f, *sol.coords);
            if (homogeneous_part(g, 2).is_zero()) {
                auto cone = simple_elliptic_check(f, *sol.coords);
                if (!cone.smooth) throw InconsistencyError("isolated triple point over a singular plane cubic");
                SingularPoint sp;
                sp.point = cone.vertex;
                sp.type = "Ẽ6";
                sp.tjurina = sol.multiplicity;
                sp.corank = 3;
                rep.singularities.push_back(std::move(sp));
                rep.cone = std::move(cone);
                continue;
            }
            auto sp = ade_type_at_point(f, *sol.coords);
            if (sp.tjurina != sol.multiplicity)
                throw InconsistencyError("local Tjurina number disagrees with the singular scheme");
            comps.push_back(parse_configuration(sp.type).front());
            rep.singularities.push_back(std::move(sp));
        } else {
            SingularPoint sp;
            sp.orbit_degree = sol.count;
            sp.tjurina = sol.multiplicity;
            sp.corank = 3 - hessian_rank_at(f, pt);
            sp.type = type_from_corank(sp.corank, sp.tjurina);
            for (int i = 0; i < sol.count; ++i) comps.push_back(parse_configuration(sp.type).front());
            rep.singularities.push_back(std::move(sp));
        }
    }
    if (rep.cone) {
        if (rep.singularities.size() != 1) throw InconsistencyError("cone point together with further singularities");
        rep.cls = SurfaceClass::simple_elliptic;
        rep.configuration = "Ẽ6";
        return rep;
    }
    rep.cls = SurfaceClass::ade;
    rep.configuration = configuration_label(comps);
    if (!allowed_config_validate(rep.configuration))
        throw InconsistencyError("configuration " + rep.configuration + " is not admissible");
    if (rep.configuration == "A1+A4")
        rep.notes.push_back("A1+A4 has a determinantal count but is missing from the list of admissible configurations");
    rep.families = family_counts(rep.configuration);
    return rep;
}

}  // namespace gtc
