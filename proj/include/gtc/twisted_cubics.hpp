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


#ifndef GTC_TWISTED_CUBICS_HPP
#define GTC_TWISTED_CUBICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gtc/groebner.hpp"
#include "gtc/matrix.hpp"

namespace gtc {

/// Saturated ideal of a curve in P^3 with its Hilbert polynomial.
struct CurveIdeal {
    Ideal ideal{4};
    HilbertPoly hilbert;
    bool acm = false;
};

/// aCM curve cut out by the signed maximal minors of a stable 3x2 matrix.
/// Throws DomainError for unstable input and InconsistencyError when the
/// Hilbert polynomial is not 3n+1.
[[nodiscard]] CurveIdeal minors_ideal(const PolyMatrix& a0);

/// Non-CM curve: a hyperplane section h of f through the singular point p
/// with an embedded point at p. In coordinates with H = y0 and
/// p = V(y0, y1, y2) the ideal is (y0^2, y0 y1, y0 y2, f|_{y0=0}).
[[nodiscard]] CurveIdeal non_cm_ideal(const MultiPoly& f, const std::vector<Rational>& p, const MultiPoly& h);

/// Curve of the P^2-family attached to the column span of `c` (3x2, or
/// 2x3 read transposed) in a stable 3x3 matrix. A nonzero determinant gives
/// the aCM curve of a * c; a skew matrix needs the surface, whose non-CM
/// curve is cut by the hyperplane through V(u) selected by c.
[[nodiscard]] CurveIdeal column_family_curve(const PolyMatrix& a, const RatMatrix& c,
                                             const std::optional<MultiPoly>& surface = std::nullopt);

/// True iff the quadrics of the saturated ideal form a net that already cuts
/// out a curve with Hilbert polynomial 3n+1. Throws DomainError unless the
/// ideal has Hilbert polynomial 3n+1.
[[nodiscard]] bool is_aCM_curve(const Ideal& ideal);

/// The eight aCM normal forms.
struct NormalForm {
    std::string name;  ///< "A(1)" .. "A(8)"
    PolyMatrix matrix;
    int stratum_dimension;
    std::string description;
};
[[nodiscard]] const std::vector<NormalForm>& normal_forms();

/// Hilbert polynomial 3n+1.
[[nodiscard]] const HilbertPoly& twisted_cubic_polynomial();

}  // namespace gtc

#endif
