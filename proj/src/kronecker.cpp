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


#include "gtc/kronecker.hpp"

#include <algorithm>
#include <array>

#include "gtc/cubic_surface.hpp"
#include "gtc/error.hpp"

namespace gtc {

namespace {

constexpr int kW = 4;

// T[r][j][w]: coefficient of x_w in a(r, j).
using Tensor = std::vector<std::vector<std::vector<Rational>>>;

Tensor coefficient_tensor(const PolyMatrix& a) {
    Tensor t(a.rows(), std::vector<std::vector<Rational>>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t j = 0; j < a.cols(); ++j) t[r][j] = linear_coefficients(a(r, j));
    return t;
}

// Coefficient matrix (r, w) of a * v for a column vector v over any ring.
template <class T>
Matrix<T> image_of_column(const Tensor& t, const std::vector<T>& v, const T& zero) {
    Matrix<T> m(t.size(), kW, zero);
    for (std::size_t r = 0; r < t.size(); ++r)
        for (int w = 0; w < kW; ++w)
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!t[r][j][w].is_zero()) m(r, w) += v[j] * t[r][j][w];
    return m;
}

// Coefficient matrix (j, w) of phi * a for a row vector phi.
template <class T>
Matrix<T> image_of_row(const Tensor& t, const std::vector<T>& phi, const T& zero) {
    const std::size_t cols = t.front().size();
    Matrix<T> m(cols, kW, zero);
    for (std::size_t j = 0; j < cols; ++j)
        for (int w = 0; w < kW; ++w)
            for (std::size_t r = 0; r < phi.size(); ++r)
                if (!t[r][j][w].is_zero()) m(j, w) += phi[r] * t[r][j][w];
    return m;
}

// (r*4 + w, j): kernel vectors v give a * v = 0.
RatMatrix column_system(const Tensor& t) {
    RatMatrix m(t.size() * kW, t.front().size(), Rational(0));
    for (std::size_t r = 0; r < t.size(); ++r)
        for (std::size_t j = 0; j < t[r].size(); ++j)
            for (int w = 0; w < kW; ++w) m(r * kW + w, j) = t[r][j][w];
    return m;
}

// (j*4 + w, r): kernel vectors phi give phi * a = 0.
RatMatrix row_system(const Tensor& t) {
    RatMatrix m(t.front().size() * kW, t.size(), Rational(0));
    for (std::size_t r = 0; r < t.size(); ++r)
        for (std::size_t j = 0; j < t[r].size(); ++j)
            for (int w = 0; w < kW; ++w) m(j * kW + w, r) = t[r][j][w];
    return m;
}

RatMatrix from_columns(const std::vector<std::vector<Rational>>& cols) {
    RatMatrix m(cols.front().size(), cols.size(), Rational(0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
    return m;
}

RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows) { return from_columns(rows).transpose(); }

std::vector<Rational> unit_vector(std::size_t n, std::size_t k) {
    std::vector<Rational> e(n, Rational(0));
    e[k] = 1;
    return e;
}

// Some nonzero column of a rank <= 1 matrix, or e_0 when it vanishes.
std::vector<Rational> spanning_column(const RatMatrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        auto c = m.col(j);
        if (std::any_of(c.begin(), c.end(), [](const Rational& x) { return !x.is_zero(); })) return c;
    }
    return unit_vector(m.rows(), 0);
}

// Basis of {x : l . x = 0}.
std::vector<std::vector<Rational>> annihilator(const std::vector<Rational>& l) {
    RatMatrix m(1, l.size(), Rational(0));
    for (std::size_t i = 0; i < l.size(); ++i) m(0, i) = l[i];
    return kernel(m);
}

// Rows [completion..., given...]: the given rows end up last.
RatMatrix rows_last(const std::vector<std::vector<Rational>>& given, std::size_t n) {
    auto all = complete_basis(given, n);
    std::rotate(all.begin(), all.begin() + static_cast<long>(given.size()), all.end());
    return from_rows(all);
}

// Columns [given..., completion...].
RatMatrix columns_first(const std::vector<std::vector<Rational>>& given, std::size_t n) {
    return from_columns(complete_basis(given, n));
}

// Nonzero vectors with entries in {-2..2} whose first nonzero entry is positive.
std::vector<std::vector<Rational>> small_candidates(std::size_t n) {
    std::vector<std::vector<Rational>> out;
    std::vector<int> v(n, -2);
    while (true) {
        const auto first = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
        if (first != v.end() && *first > 0) {
            std::vector<Rational> q;
            for (int x : v) q.emplace_back(x);
            out.push_back(std::move(q));
        }
        std::size_t k = 0;
        while (k < n && v[k] == 2) v[k++] = -2;
        if (k == n) break;
        ++v[k];
    }
    return out;
}

StabilityVerdict flagged(StabilityLevel level, std::string_view tag) {
    StabilityVerdict v;
    v.level = level;
    v.pattern = std::string(tag);
    return v;
}

// Pattern: some v with a * v = 0.
std::optional<StabilityVerdict> zero_column(const Tensor& t, std::string_view tag) {
    const auto ker = kernel(column_system(t));
    if (ker.empty()) return std::nullopt;
    auto v = flagged(StabilityLevel::unstable, tag);
    v.witness = StabilityWitness{identity(t.size()), columns_first({ker.front()}, t.front().size())};
    return v;
}

// Pattern: some phi with phi * a = 0.
std::optional<StabilityVerdict> zero_row(const Tensor& t, std::string_view tag) {
    const auto ker = kernel(row_system(t));
    if (ker.empty()) return std::nullopt;
    auto v = flagged(StabilityLevel::unstable, tag);
    v.witness = StabilityWitness{rows_last({ker.front()}, t.size()), identity(t.front().size())};
    return v;
}

// Witness for "a * v lies in l (x) W": v first column, rows killing l last.
StabilityWitness column_into_line_witness(const Tensor& t, const std::vector<Rational>& v) {
    const RatMatrix img = image_of_column(t, v, Rational(0));
    return {rows_last(annihilator(spanning_column(img)), t.size()), columns_first({v}, v.size())};
}

// Kernel basis of psi on the chart psi_c = 1, psi_j = 0 for j < c.
template <class T>
std::vector<std::vector<T>> hyperplane_basis(const std::vector<T>& psi, std::size_t c, const T& zero, const T& one) {
    std::vector<std::vector<T>> out;
    for (std::size_t j = 0; j < psi.size(); ++j) {
        if (j == c) continue;
        std::vector<T> b(psi.size(), zero);
        b[j] = one;
        b[c] = zero - psi[j];
        out.push_back(std::move(b));
    }
    return out;
}

// 3 x 8 coefficient matrix of a restricted to the span of two columns.
template <class T>
Matrix<T> image_of_plane(const Tensor& t, const std::vector<std::vector<T>>& basis, const T& zero) {
    Matrix<T> m(t.size(), 2 * kW, zero);
    for (std::size_t k = 0; k < 2; ++k) {
        const Matrix<T> img = image_of_column(t, basis[k], zero);
        for (std::size_t r = 0; r < t.size(); ++r)
            for (int w = 0; w < kW; ++w) m(r, k * kW + w) = img(r, w);
    }
    return m;
}

// (*,*,*;0,0,*;0,0,*): a plane of columns mapped into l (x) W.
std::optional<StabilityVerdict> zero_block(const Tensor& t) {
    for (std::size_t c = 0; c < 3; ++c) {
        const int params = static_cast<int>(2 - c);
        const int n = std::max(params, 1);
        std::vector<MultiPoly> psi(3, MultiPoly(n));
        psi[c] = MultiPoly::constant(n, 1);
        for (std::size_t j = c + 1; j < 3; ++j) psi[j] = MultiPoly::variable(n, static_cast<int>(j - c - 1));
        const auto basis = hyperplane_basis(psi, c, MultiPoly(n), MultiPoly::constant(n, 1));
        const auto minors = two_by_two_minors(image_of_plane(t, basis, MultiPoly(n)));
        GroebnerBasis gb = groebner_basis(minors, n);
        if (gb.is_unit()) continue;
        auto v = flagged(StabilityLevel::unstable, pattern::kZeroBlock);
        v.proof = std::move(gb);
        for (const auto& cand : small_candidates(3)) {
            const auto lead = static_cast<std::size_t>(
                std::find_if(cand.begin(), cand.end(), [](const Rational& x) { return !x.is_zero(); }) - cand.begin());
            std::vector<Rational> p = cand;
            for (auto& x : p) x /= cand[lead];
            const auto b = hyperplane_basis(p, lead, Rational(0), Rational(1));
            const RatMatrix img = image_of_plane(t, b, Rational(0));
            if (rank(img) > 1) continue;
            v.witness = StabilityWitness{rows_last(annihilator(spanning_column(img)), 3), columns_first(b, 3)};
            break;
        }
        return v;
    }
    return std::nullopt;
}

// Projective solvability of the 2x2 minors of a 3x4 matrix linear in 3
// homogeneous parameters.
std::optional<GroebnerBasis> minors_have_projective_zero(const PolyMatrix& m) {
    Ideal ideal(3, two_by_two_minors(m));
    if (proj_dimension(ideal) < 0) return std::nullopt;
    return ideal.basis();
}

std::vector<MultiPoly> parameter_vector() {
    return {MultiPoly::variable(3, 0), MultiPoly::variable(3, 1), MultiPoly::variable(3, 2)};
}

std::optional<StabilityVerdict> column_into_line(const Tensor& t) {
    auto proof = minors_have_projective_zero(image_of_column(t, parameter_vector(), MultiPoly(3)));
    if (!proof) return std::nullopt;
    auto v = flagged(StabilityLevel::semistable, pattern::kColumnIntoLine);
    v.proof = std::move(proof);
    for (const auto& cand : small_candidates(3))
        if (rank(image_of_column(t, cand, Rational(0))) <= 1) {
            v.witness = column_into_line_witness(t, cand);
            break;
        }
    return v;
}

std::optional<StabilityVerdict> row_into_line(const Tensor& t) {
    auto proof = minors_have_projective_zero(image_of_row(t, parameter_vector(), MultiPoly(3)));
    if (!proof) return std::nullopt;
    auto v = flagged(StabilityLevel::semistable, pattern::kRowIntoLine);
    v.proof = std::move(proof);
    for (const auto& cand : small_candidates(3)) {
        const RatMatrix img = image_of_row(t, cand, Rational(0));
        if (rank(img) > 1) continue;
        v.witness = StabilityWitness{rows_last({cand}, 3), columns_first(annihilator(spanning_column(img)), 3)};
        break;
    }
    return v;
}

}  // namespace

bool matches_pattern(const PolyMatrix& a, std::string_view display) {
    std::string s;
    for (char ch : display)
        if (ch != '(' && ch != ')' && ch != ' ') s += ch;
    std::size_t r = 0;
    std::size_t c = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char ch = s[i];
        if (ch == ';') {
            ++r;
            c = 0;
        } else if (ch == ',') {
            ++c;
        } else {
            if (r >= a.rows() || c >= a.cols()) throw DomainError("pattern does not fit the matrix");
            if (ch == '0' && !a(r, c).is_zero()) return false;
        }
    }
    if (r + 1 != a.rows() || c + 1 != a.cols()) throw DomainError("pattern does not fit the matrix");
    return true;
}

void require_linear_matrix(const PolyMatrix& a, std::size_t rows, std::size_t cols) {
    if (a.rows() != rows || a.cols() != cols)
        throw DomainError("expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const MultiPoly& e = a(i, j);
            if (e.nvars() != kW) throw DomainError("matrix entries must live in four variables");
            if (!e.is_zero() && (!e.is_homogeneous() || e.total_degree() != 1))
                throw DomainError("matrix entries must be linear forms");
        }
}

std::string to_string(StabilityLevel level) {
    switch (level) {
        case StabilityLevel::unstable: return "unstable";
        case StabilityLevel::semistable: return "semistable-not-stable";
        case StabilityLevel::stable: return "stable";
    }
    return "";
}

std::string to_string(DetVerdict v) {
    switch (v) {
        case DetVerdict::inconclusive: return "inconclusive";
        case DetVerdict::semistable_at_least: return "semistable-at-least";
        case DetVerdict::stable_at_least: return "stable-at-least";
    }
    return "";
}

StabilityVerdict semistable_3x2(const PolyMatrix& a0) {
    require_linear_matrix(a0, 3, 2);
    const Tensor t = coefficient_tensor(a0);
    if (auto v = zero_row(t, pattern::kZeroRow32)) return *v;

    // a0 * (s, 1): the 2x2 minors are binary quadrics, dehomogenized at t = 1.
    const std::vector<UniPoly> v_aff = {UniPoly::monomial(1), UniPoly::monomial(0)};
    const auto img = image_of_column(t, v_aff, UniPoly());
    UniPoly g;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t q = r + 1; q < 3; ++q)
            for (int w = 0; w < kW; ++w)
                for (int z = w + 1; z < kW; ++z) {
                    const UniPoly m = img(r, w) * img(q, z) - img(r, z) * img(q, w);
                    if (!m.is_zero()) g = g.is_zero() ? monic(m) : gcd(g, m);
                }
    std::optional<std::vector<Rational>> root;
    bool exists = false;
    if (g.is_zero()) {
        exists = true;
        root = std::vector<Rational>{Rational(0), Rational(1)};
    } else if (g.degree() >= 1) {
        exists = true;
        const auto rr = rational_roots(g);
        if (!rr.empty()) root = std::vector<Rational>{rr.front(), Rational(1)};
    }
    const std::vector<Rational> infinity{Rational(1), Rational(0)};
    if (rank(image_of_column(t, infinity, Rational(0))) <= 1) {
        exists = true;
        if (!root) root = infinity;
    }
    if (!exists) return StabilityVerdict{};
    auto v = flagged(StabilityLevel::unstable, pattern::kLowerLeft32);
    if (root) v.witness = column_into_line_witness(t, *root);
    return v;
}

StabilityVerdict stability_3x3(const PolyMatrix& a) {
    require_linear_matrix(a, 3, 3);
    const Tensor t = coefficient_tensor(a);
    if (auto v = zero_column(t, pattern::kZeroColumn)) return *v;
    if (auto v = zero_row(t, pattern::kZeroRow)) return *v;
    if (auto v = zero_block(t)) return *v;
    if (auto v = column_into_line(t)) return *v;
    if (auto v = row_into_line(t)) return *v;
    return StabilityVerdict{};
}

DetVerdict det_criterion(const PolyMatrix& a) {
    require_linear_matrix(a, 3, 3);
    const MultiPoly d = matrix_det(a);
    if (d.is_zero()) return DetVerdict::inconclusive;
    return has_linear_factor(d) ? DetVerdict::semistable_at_least : DetVerdict::stable_at_least;
}

std::pair<std::vector<MultiPoly>, std::vector<MultiPoly>> rank1_factorize(const PolyMatrix& b) {
    if (b.rows() == 0 || b.cols() == 0) throw DomainError("empty matrix");
    const int n = b(0, 0).nvars();
    for (const auto& m : two_by_two_minors(b))
        if (!m.is_zero()) throw DomainError("matrix has a nonzero 2x2 minor");
    std::vector<MultiPoly> v;
    std::vector<MultiPoly> u(b.cols(), MultiPoly(n));
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto col = b.col(j);
        if (std::all_of(col.begin(), col.end(), [](const MultiPoly& p) { return p.is_zero(); })) continue;
        MultiPoly g(n);
        for (const auto& e : col)
            if (!e.is_zero()) g = g.is_zero() ? monic(e) : poly_gcd(g, e);
        for (auto& e : col) e = exact_divide(e, g);
        if (v.empty()) {
            v = std::move(col);
            u[j] = g;
            continue;
        }
        // Primitive columns are proportional over the field.
        std::size_t i = 0;
        while (v[i].is_zero()) ++i;
        if (col[i].is_zero()) throw InconsistencyError("primitive columns are not proportional");
        const Rational c = col[i].leading_term().coeff / v[i].leading_term().coeff;
        for (std::size_t k = 0; k < col.size(); ++k)
            if (col[k] != v[k] * c) throw InconsistencyError("primitive columns are not proportional");
        u[j] = g * c;
    }
    if (v.empty()) throw DomainError("zero matrix has no rank one factorization");
    return {v, u};
}

PolyMatrix koszul_matrix(const std::vector<MultiPoly>& u) {
    if (u.size() != 3) throw DomainError("Koszul matrix needs three forms");
    const MultiPoly z(u[0].nvars());
    return PolyMatrix{{z, u[2], -u[1]}, {-u[2], z, u[0]}, {u[1], -u[0], z}};
}

SkewNormalForm skew_normalize(const PolyMatrix& a) {
    require_linear_matrix(a, 3, 3);
    if (!matrix_det(a).is_zero()) throw DomainError("skew normal form needs det = 0");
    if (stability_3x3(a).level != StabilityLevel::stable) throw DomainError("skew normal form needs a stable matrix");

    const PolyMatrix c = matrix_adjugate(a);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (c(i, j).is_zero()) throw InconsistencyError("adjugate of a stable matrix has a zero entry");
    auto [u, v] = rank1_factorize(c);
    (void)v;
    const Rational lc = u[0].leading_term().coeff;
    for (auto& e : u) {
        if (e.is_zero() || !e.is_homogeneous() || e.total_degree() != 1)
            throw InconsistencyError("kernel vector of the adjugate is not linear");
        e *= Rational(1) / lc;
    }
    RatMatrix coeff(3, kW, Rational(0));
    for (std::size_t i = 0; i < 3; ++i) {
        const auto cs = linear_coefficients(u[i]);
        for (int w = 0; w < kW; ++w) coeff(i, w) = cs[w];
    }
    const auto pk = kernel(coeff);
    if (pk.size() != 1) throw InconsistencyError("kernel forms are linearly dependent");

    // Row i of a equals sum_k m(i,k) * row k of K(u): 12 equations, 3 unknowns.
    const PolyMatrix k = koszul_matrix(u);
    const Tensor tk = coefficient_tensor(k);
    const Tensor ta = coefficient_tensor(a);
    RatMatrix sys(3 * kW, 3, Rational(0));
    for (std::size_t kk = 0; kk < 3; ++kk)
        for (std::size_t j = 0; j < 3; ++j)
            for (int w = 0; w < kW; ++w) sys(j * kW + w, kk) = tk[kk][j][w];
    RatMatrix m(3, 3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Rational> rhs(3 * kW, Rational(0));
        for (std::size_t j = 0; j < 3; ++j)
            for (int w = 0; w < kW; ++w) rhs[j * kW + w] = ta[i][j][w];
        const auto sol = solve(sys, rhs);
        if (!sol) throw InconsistencyError("matrix is not a multiple of the Koszul matrix");
        for (std::size_t kk = 0; kk < 3; ++kk) m(i, kk) = (*sol)[kk];
    }
    if (det(m).is_zero()) throw InconsistencyError("transformation to the Koszul matrix is singular");

    std::vector<Rational> p = pk.front();
    const auto lead = std::find_if(p.begin(), p.end(), [](const Rational& x) { return !x.is_zero(); });
    const Rational s = *lead;
    for (auto& x : p) x /= s;
    return {m, u, p};
}

}  // namespace gtc
