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

// Independent reference computations for the test suites. They favour
// obviousness over speed and share no code paths with the library beyond
// the polynomial container and the term-order comparator.

#ifndef GTC_TESTS_ORACLES_HPP
#define GTC_TESTS_ORACLES_HPP

#include <vector>

#include "gtc/groebner.hpp"
#include "gtc/matrix.hpp"
#include "gtc/poly.hpp"

namespace gtc::oracle {

/// Rank by textbook Gauss-Jordan elimination with rational pivots.
std::size_t naive_rank(const RatMatrix& m);

/// Every S-polynomial of the basis reduces to zero by plain multivariate
/// division under the basis' own order.
bool buchberger_criterion(const GroebnerBasis& gb);

/// dim (R/I)_d from the span of monomial multiples of the generators.
long brute_hilbert_function(const std::vector<MultiPoly>& gens, int nvars, int degree);

/// dim of the local algebra at the origin, Q[x]_(x) / <gens>, computed as
/// the stable value of dim Q[x] / (<gens> + m^N). Returns -1 when it does
/// not stabilise below `max_order`.
long local_algebra_dim(const std::vector<MultiPoly>& gens, int nvars, int max_order = 14);

/// det(t I - m) expanded as a cofactor determinant over Q[t].
UniPoly charpoly_by_cofactors(const RatMatrix& m);

/// Coefficient matrix: one row per polynomial, one column per monomial in
/// `monos` (monomials outside the list must not occur).
RatMatrix coefficient_rows(const std::vector<MultiPoly>& polys, const std::vector<Monomial>& monos);

}  // namespace gtc::oracle

#endif
