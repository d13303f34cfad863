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


#include "gtc/twisted_cubics.hpp"

#include "gtc/error.hpp"
#include "gtc/kronecker.hpp"

namespace gtc {

namespace {

constexpr int kN = 4;

HilbertPoly make_3n1() {
    HilbertPoly hp;
    hp.poly = UniPoly::monomial(1, Rational(3)) + UniPoly::monomial(0, Rational(1));
    return hp;
}

// Signed maximal minors: (-1)^i times the minor with row i deleted.
std::vector<MultiPoly> signed_minors(const PolyMatrix& a0) {
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t r = i == 0 ? 1 : 0, s = i == 2 ? 1 : 2;
        MultiPoly m = a0(r, 0) * a0(s, 1) - a0(r, 1) * a0(s, 0);
        out.push_back(i % 2 == 1 ? -m : m);
    }
    return out;
}

bool singular_at(const MultiPoly& f, const std::vector<Rational>& p) {
    if (!evaluate(f, p).is_zero()) return false;
    for (int v = 0; v < f.nvars(); ++v)
        if (!evaluate(derivative(f, v), p).is_zero()) return false;
    return true;
}

// Linear forms vanishing at p.
std::vector<MultiPoly> annihilator(const std::vector<Rational>& p) {
    RatMatrix row(1, p.size(), Rational(0));
    for (std::size_t j = 0; j < p.size(); ++j) row(0, j) = p[j];
    std::vector<MultiPoly> out;
    for (const auto& v : kernel(row)) out.push_back(linear_form(v));
    return out;
}

CurveIdeal finish(const Ideal& raw, bool acm) {
    CurveIdeal c;
    c.ideal = saturate_irrelevant(raw);
    c.hilbert = hilbert_polynomial(c.ideal);
    c.acm = acm;
    return c;
}

RatMatrix column_selection(const RatMatrix& c) {
    RatMatrix sel = c.rows() == 2 && c.cols() == 3 ? c.transpose() : c;
    if (sel.rows() != 3 || sel.cols() != 2) throw DomainError("column selection must be 3x2 or 2x3");
    if (rank(sel) != 2) throw DomainError("column selection must have rank 2");
    return sel;
}

}  // namespace

const HilbertPoly& twisted_cubic_polynomial() {
    static const HilbertPoly hp = make_3n1();
    return hp;
}

CurveIdeal minors_ideal(const PolyMatrix& a0) {
    require_linear_matrix(a0, 3, 2);
    if (semistable_3x2(a0).level != StabilityLevel::stable)
        throw DomainError("3x2 matrix is not stable");
    CurveIdeal c = finish(Ideal(kN, signed_minors(a0)), true);
    if (c.hilbert != twisted_cubic_polynomial())
        throw InconsistencyError("minors of a stable 3x2 matrix have Hilbert polynomial " + c.hilbert.to_string());
    return c;
}

CurveIdeal non_cm_ideal(const MultiPoly& f, const std::vector<Rational>& p, const MultiPoly& h) {
    if (f.nvars() != kN || !f.is_homogeneous() || f.total_degree() != 3)
        throw DomainError("surface must be a cubic form in 4 variables");
    if (p.size() != kN) throw DomainError("point must have 4 coordinates");
    if (h.nvars() != kN || !h.is_homogeneous() || h.total_degree() != 1)
        throw DomainError("hyperplane must be a linear form in 4 variables");
    if (!evaluate(h, p).is_zero()) throw DomainError("hyperplane does not pass through the point");
    if (!singular_at(f, p)) throw DomainError("point is not singular on the surface");

    // With H = y0 and p = V(y0, y1, y2), write f = y0 q + c(y1, y2, y3). Then
    // q(p) = df/dy0(p) = 0, so y0 q lies in H * m_p and the ideal below equals
    // (y0^2, y0 y1, y0 y2, c).
    std::vector<MultiPoly> gens;
    for (const auto& l : annihilator(p)) gens.push_back(h * l);
    gens.push_back(f);

    CurveIdeal c = finish(Ideal(kN, std::move(gens)), false);
    if (c.hilbert != twisted_cubic_polynomial())
        throw InconsistencyError("hyperplane section has Hilbert polynomial " + c.hilbert.to_string() +
                                 "; the plane is a component of the surface");
    if (is_aCM_curve(c.ideal)) throw InconsistencyError("constructed non-CM curve is arithmetically Cohen-Macaulay");
    return c;
}

CurveIdeal column_family_curve(const PolyMatrix& a, const RatMatrix& c, const std::optional<MultiPoly>& surface) {
    require_linear_matrix(a, 3, 3);
    const RatMatrix sel = column_selection(c);
    if (stability_3x3(a).level != StabilityLevel::stable) throw DomainError("3x3 matrix is not stable");
    const PolyMatrix a0 = a * lift(sel, kN);
    const MultiPoly d = matrix_det(a);

    if (!d.is_zero()) {
        if (surface && !(monic(*surface) == monic(d)))
            throw InconsistencyError("surface equation differs from the determinant");
        std::vector<MultiPoly> gens = signed_minors(a0);
        gens.push_back(d);
        if (semistable_3x2(a0).level != StabilityLevel::stable)
            throw InconsistencyError("column selection of a stable matrix is unstable");
        CurveIdeal curve = finish(Ideal(kN, std::move(gens)), false);
        if (curve.hilbert != twisted_cubic_polynomial())
            throw InconsistencyError("column curve has Hilbert polynomial " + curve.hilbert.to_string());
        curve.acm = is_aCM_curve(curve.ideal);
        return curve;
    }

    // Skew case: a = m K(u), so the minors of a0 are H u_i for the linear
    // form H = (c1 x c2) . u through p = V(u).
    const SkewNormalForm nf = skew_normalize(a);
    if (!surface) throw DomainError("a matrix with zero determinant needs the surface equation");
    MultiPoly h(kN);
    for (const auto& m : two_by_two_minors(a0)) h = h.is_zero() ? m : poly_gcd(h, m);
    if (h.total_degree() != 1) throw InconsistencyError("minors of a skew column selection share no linear factor");
    return non_cm_ideal(*surface, nf.point, monic(h));
}

bool is_aCM_curve(const Ideal& ideal) {
    if (ideal.nvars() != kN || !ideal.is_homogeneous()) throw DomainError("curve ideal must be homogeneous in 4 variables");
    const Ideal sat = saturate_irrelevant(ideal);
    if (hilbert_polynomial(sat) != twisted_cubic_polynomial())
        throw DomainError("curve ideal does not have Hilbert polynomial 3n+1");
    auto quadrics = graded_piece(sat, 2);
    if (quadrics.size() != 3) return false;
    return hilbert_polynomial(Ideal(kN, std::move(quadrics))) == twisted_cubic_polynomial();
}

const std::vector<NormalForm>& normal_forms() {
    static const std::vector<NormalForm> catalog = [] {
        const std::string nonreduced = "non-reduced curve containing a line with multiplicity at least 2";
        return std::vector<NormalForm>{
            {"A(1)", parse_matrix("x0,x1; x1,x2; x2,x3"), 12, "smooth twisted cubic"},
            {"A(2)", parse_matrix("x0,0; x1,x2; x2,x3"), 11, "union of a smooth plane conic and a line"},
            {"A(3)", parse_matrix("x0,0; x1,x2; 0,x3"), 10, "chain of three lines"},
            {"A(4)", parse_matrix("x0,0; x1,x1; 0,x3"), 9, "union of three collinear but not coplanar lines"},
            {"A(5)", parse_matrix("x0,0; x1,x0; x2,x3"), 9, nonreduced},
            {"A(6)", parse_matrix("x0,0; x1,x0; 0,x3"), 8, nonreduced},
            {"A(7)", parse_matrix("x0,0; x1,x0; x2,x1"), 7, nonreduced},
            {"A(8)", parse_matrix("x0,0; x1,x0; 0,x1"), 4, nonreduced},
        };
    }();
    return catalog;
}

}  // namespace gtc
