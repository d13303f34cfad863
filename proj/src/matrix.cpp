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

#include "gtc/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace gtc {

RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix zeros(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols, Rational(0)); }

RatMatrix column(const std::vector<Rational>& v) {
    RatMatrix m(v.size(), 1, Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

namespace {

struct IntegralRows {
    std::vector<std::vector<Integer>> rows;
    Rational scale{1};  // product of the factors each row was multiplied by
};

IntegralRows clear_denominators(const RatMatrix& m) {
    IntegralRows out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer den = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) den = lcm(den, m(i, j).denominator());
        std::vector<Integer> r;
        r.reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back((m(i, j) * Rational(den)).numerator());
        out.rows.push_back(std::move(r));
        out.scale *= Rational(den);
    }
    return out;
}

// Fraction-free forward elimination in place. Returns pivot columns and
// the number of row swaps performed.
std::pair<std::vector<std::size_t>, int> bareiss_in_place(std::vector<std::vector<Integer>>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    int swaps = 0;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            ++swaps;
        }
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }
    return {pivots, swaps};
}

}  // namespace

Echelon bareiss_echelon(const RatMatrix& m) {
    IntegralRows ir = clear_denominators(m);
    auto [pivots, swaps] = bareiss_in_place(ir.rows, m.cols());
    (void)swaps;
    ir.rows.resize(pivots.size());
    return Echelon{std::move(ir.rows), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return bareiss_echelon(m).pivots.size(); }

namespace {

// Reduced row echelon form over Q from the fraction-free echelon rows.
std::vector<std::vector<Rational>> rref_rows(const Echelon& e, std::size_t cols) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : e.rows) {
        std::vector<Rational> v;
        v.reserve(cols);
        for (const auto& x : r) v.emplace_back(x);
        rows.push_back(std::move(v));
    }
    for (std::size_t k = rows.size(); k-- > 0;) {
        const std::size_t pc = e.pivots[k];
        const Rational inv = Rational(1) / rows[k][pc];
        for (auto& x : rows[k]) x *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            const Rational f = rows[i][pc];
            if (f.is_zero()) continue;
            for (std::size_t j = pc; j < cols; ++j) rows[i][j] -= f * rows[k][j];
        }
    }
    return rows;
}

}  // namespace

std::vector<std::vector<Rational>> kernel(const RatMatrix& m) {
    const Echelon e = bareiss_echelon(m);
    const auto rows = rref_rows(e, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t k = 0; k < rows.size(); ++k) v[e.pivots[k]] = -rows[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational det(const RatMatrix& m) {
    if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
    if (m.rows() == 0) return Rational(1);
    IntegralRows ir = clear_denominators(m);
    auto [pivots, swaps] = bareiss_in_place(ir.rows, m.cols());
    if (pivots.size() < m.rows()) return Rational(0);
    Rational d(ir.rows.back().back());
    if (swaps % 2 != 0) d = -d;
    return d / ir.scale;
}

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw DomainError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const Echelon e = bareiss_echelon(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
    const auto rows = rref_rows(e, 2 * n);
    RatMatrix inv(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = rows[i][n + j];
    return inv;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw DomainError("right-hand side has wrong length");
    RatMatrix aug(m.rows(), m.cols() + 1, Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const Echelon e = bareiss_echelon(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    const auto rows = rref_rows(e, m.cols() + 1);
    std::vector<Rational> x(m.cols(), Rational(0));
    for (std::size_t k = 0; k < rows.size(); ++k) x[e.pivots[k]] = rows[k][m.cols()];
    return x;
}

UniPoly charpoly(const RatMatrix& m) {
    if (!m.is_square()) throw DomainError("characteristic polynomial needs a square matrix");
    const std::size_t n = m.rows();
    RatMatrix h = m;
    // Reduce to upper Hessenberg form by similarity transformations.
    for (std::size_t k = 1; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && h(piv, k - 1).is_zero()) ++piv;
        if (piv == n) continue;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(k, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, k));
        }
        const Rational t = h(k, k - 1);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational u = h(i, k - 1) / t;
            if (u.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(k, j);
            for (std::size_t j = 0; j < n; ++j) h(j, k) += u * h(j, i);
        }
    }
    std::vector<UniPoly> p;
    p.emplace_back(std::vector<Rational>{Rational(1)});
    for (std::size_t k = 0; k < n; ++k) {
        UniPoly next = UniPoly({-h(k, k), Rational(1)}) * p[k];
        Rational t(1);
        for (std::size_t i = k; i-- > 0;) {
            t *= h(i + 1, i);
            if (t.is_zero()) break;
            next -= p[i] * (h(i, k) * t);
        }
        p.push_back(std::move(next));
    }
    return p.back();
}

RatMatrix evaluate(const UniPoly& p, const RatMatrix& m) {
    if (!m.is_square()) throw DomainError("polynomial evaluation needs a square matrix");
    RatMatrix acc = zeros(m.rows(), m.cols());
    for (int i = p.degree(); i >= 0; --i) {
        acc = m.rows() == 0 ? acc : acc * m;
        for (std::size_t d = 0; d < m.rows(); ++d) acc(d, d) += p.coeff(i);
    }
    return acc;
}

std::vector<std::vector<Rational>> complete_basis(std::vector<std::vector<Rational>> vectors, std::size_t n) {
    auto as_matrix = [n](const std::vector<std::vector<Rational>>& vs) {
        RatMatrix m(vs.size(), n, Rational(0));
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = vs[i][j];
        return m;
    };
    if (!vectors.empty() && rank(as_matrix(vectors)) != vectors.size())
        throw DomainError("basis completion needs independent vectors");
    for (std::size_t k = 0; k < n && vectors.size() < n; ++k) {
        std::vector<Rational> e(n, Rational(0));
        e[k] = 1;
        vectors.push_back(e);
        if (rank(as_matrix(vectors)) != vectors.size()) vectors.pop_back();
    }
    return vectors;
}

MultiPoly matrix_det(const PolyMatrix& m) {
    if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) throw DomainError("determinant of an empty matrix");
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    MultiPoly d(m(0, 0).nvars());
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        MultiPoly term = m(0, j) * matrix_det(minor_matrix(m, 0, j));
        if (j % 2 == 0) d += term;
        else d -= term;
    }
    return d;
}

PolyMatrix matrix_adjugate(const PolyMatrix& m) {
    if (!m.is_square() || m.rows() == 0) throw DomainError("adjugate needs a non-empty square matrix");
    const std::size_t n = m.rows();
    const int nv = m(0, 0).nvars();
    PolyMatrix adj(n, n, MultiPoly(nv));
    if (n == 1) {
        adj(0, 0) = MultiPoly::constant(nv, 1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            MultiPoly c = matrix_det(minor_matrix(m, j, i));
            adj(i, j) = (i + j) % 2 == 0 ? c : -c;
        }
    return adj;
}

std::vector<MultiPoly> two_by_two_minors(const PolyMatrix& m) {
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.rows(); ++j)
            for (std::size_t k = 0; k < m.cols(); ++k)
                for (std::size_t l = k + 1; l < m.cols(); ++l)
                    out.push_back(m(i, k) * m(j, l) - m(i, l) * m(j, k));
    return out;
}

PolyMatrix lift(const RatMatrix& m, int nvars) {
    PolyMatrix out(m.rows(), m.cols(), MultiPoly(nvars));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = MultiPoly::constant(nvars, m(i, j));
    return out;
}

PolyMatrix poly_identity(std::size_t n, int nvars) { return lift(identity(n), nvars); }

MultiPoly linear_change(const MultiPoly& p, const RatMatrix& g) {
    const auto n = static_cast<std::size_t>(p.nvars());
    if (g.rows() != n || g.cols() != n) throw DomainError("change of coordinates has wrong size");
    if (det(g).is_zero()) throw DomainError("change of coordinates is not invertible");
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(linear_form(g.row(i)));
    return substitute(p, images);
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\n\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\n\r");
    return s.substr(b, e - b + 1);
}

template <class T, class F>
Matrix<T> parse_grid(std::string_view text, const T& fill, F&& parse_entry) {
    std::vector<std::vector<T>> rows;
    for (const auto& r : split(text, ';')) {
        if (trim(r).empty()) throw ParseError("empty matrix row");
        std::vector<T> row;
        for (const auto& e : split(r, ',')) {
            const std::string t = trim(e);
            if (t.empty()) throw ParseError("empty matrix entry");
            row.push_back(parse_entry(t));
        }
        if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("matrix rows have different lengths");
        rows.push_back(std::move(row));
    }
    Matrix<T> m(rows.size(), rows.front().size(), fill);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace

PolyMatrix parse_matrix(std::string_view text, int nvars) {
    return parse_grid(text, MultiPoly(nvars), [nvars](const std::string& t) { return parse_poly(t, nvars); });
}

RatMatrix parse_rat_matrix(std::string_view text) {
    return parse_grid(text, Rational(0), [](const std::string& t) {
        std::string compact;
        for (char c : t)
            if (c != ' ') compact += c;
        return Rational::parse(compact);
    });
}

std::string to_string(const PolyMatrix& m, std::string_view prefix) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i > 0) os << "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) os << ", ";
            os << to_string(m(i, j), prefix);
        }
    }
    return os.str();
}

std::string to_string(const RatMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i > 0) os << "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) os << ", ";
            os << m(i, j);
        }
    }
    return os.str();
}

}  // namespace gtc
