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

#ifndef GTC_MATRIX_HPP
#define GTC_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "gtc/error.hpp"
#include "gtc/poly.hpp"
#include "gtc/rational.hpp"
#include "gtc/univariate.hpp"

namespace gtc {

/// Dense row-major matrix over an exact ring (Rational or MultiPoly).
template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DomainError("ragged matrix initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    [[nodiscard]] std::vector<T> col(std::size_t j) const {
        std::vector<T> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix t;
        t.rows_ = cols_;
        t.cols_ = rows_;
        t.data_.reserve(data_.size());
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = 0; i < rows_; ++i) t.data_.push_back((*this)(i, j));
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<MultiPoly>;

template <class A, class B>
auto operator*(const Matrix<A>& a, const Matrix<B>& b) {
    using R = decltype(a(0, 0) * b(0, 0));
    if (a.cols() != b.rows() || a.cols() == 0) throw DomainError("matrix product shape mismatch");
    Matrix<R> out(a.rows(), b.cols(), a(0, 0) * b(0, 0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            R s = a(i, 0) * b(0, j);
            for (std::size_t k = 1; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            out(i, j) = std::move(s);
        }
    return out;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix sum shape mismatch");
    Matrix<T> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
    return out;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix difference shape mismatch");
    Matrix<T> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
    return out;
}

template <class T>
Matrix<T> scaled(Matrix<T> m, const Rational& c) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= c;
    return m;
}

/// Matrix obtained by erasing row r and column c.
template <class T>
Matrix<T> minor_matrix(const Matrix<T>& m, std::size_t r, std::size_t c) {
    Matrix<T> out(m.rows() - 1, m.cols() - 1, m(0, 0));
    for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
            if (j == c) continue;
            out(oi, oj++) = m(i, j);
        }
        ++oi;
    }
    return out;
}

/// Sub-matrix on the given row and column index lists.
template <class T>
Matrix<T> submatrix(const Matrix<T>& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    Matrix<T> out(rows.size(), cols.size(), m(0, 0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
    return out;
}

// ---------------------------------------------------------------------------
// Rational linear algebra (fraction-free elimination)

[[nodiscard]] RatMatrix identity(std::size_t n);
[[nodiscard]] RatMatrix zeros(std::size_t rows, std::size_t cols);
/// Column vector from entries.
[[nodiscard]] RatMatrix column(const std::vector<Rational>& v);

/// Bareiss echelon data: integral echelon form and its pivot columns.
struct Echelon {
    std::vector<std::vector<Integer>> rows;  ///< nonzero echelon rows
    std::vector<std::size_t> pivots;         ///< pivot column of each row
};
[[nodiscard]] Echelon bareiss_echelon(const RatMatrix& m);

[[nodiscard]] std::size_t rank(const RatMatrix& m);
/// Basis of the right kernel {v : m v = 0}, one vector per free column.
[[nodiscard]] std::vector<std::vector<Rational>> kernel(const RatMatrix& m);
/// Fraction-free determinant. Throws DomainError on non-square input.
[[nodiscard]] Rational det(const RatMatrix& m);
/// Inverse; throws DomainError when singular.
[[nodiscard]] RatMatrix inverse(const RatMatrix& m);
/// Some solution x of m x = b, or nullopt when inconsistent.
[[nodiscard]] std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b);
/// Characteristic polynomial det(t I - m) via Hessenberg reduction.
[[nodiscard]] UniPoly charpoly(const RatMatrix& m);
/// Evaluates a polynomial at a square matrix.
[[nodiscard]] RatMatrix evaluate(const UniPoly& p, const RatMatrix& m);
/// Extends the given independent vectors to a basis of Q^n with standard
/// basis vectors; returns the completed list (inputs first).
[[nodiscard]] std::vector<std::vector<Rational>> complete_basis(std::vector<std::vector<Rational>> vectors,
                                                                std::size_t n);

// ---------------------------------------------------------------------------
// Polynomial matrices

/// Determinant by cofactor expansion (exact, no division).
[[nodiscard]] MultiPoly matrix_det(const PolyMatrix& m);
/// Transposed cofactor matrix; satisfies m * adj(m) = det(m) * I.
[[nodiscard]] PolyMatrix matrix_adjugate(const PolyMatrix& m);
/// All 2x2 minors (row pairs i<j, column pairs k<l), row-major in pairs.
[[nodiscard]] std::vector<MultiPoly> two_by_two_minors(const PolyMatrix& m);
/// Constant matrix lifted to a polynomial matrix in `nvars` variables.
[[nodiscard]] PolyMatrix lift(const RatMatrix& m, int nvars);
[[nodiscard]] PolyMatrix poly_identity(std::size_t n, int nvars);

/// Applies the change of coordinates x -> g x, i.e. replaces x_i by
/// sum_j g(i,j) x_j. Throws DomainError when g is singular or mis-sized.
[[nodiscard]] MultiPoly linear_change(const MultiPoly& p, const RatMatrix& g);

/// Parses "a,b,c; d,e,f" into a polynomial matrix. Throws ParseError.
[[nodiscard]] PolyMatrix parse_matrix(std::string_view text, int nvars = 4);
/// Parses "1,0; 0,1/2" into a rational matrix. Throws ParseError.
[[nodiscard]] RatMatrix parse_rat_matrix(std::string_view text);
[[nodiscard]] std::string to_string(const PolyMatrix& m, std::string_view prefix = "x");
[[nodiscard]] std::string to_string(const RatMatrix& m);

}  // namespace gtc

#endif
