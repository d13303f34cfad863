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


#ifndef GTC_CUBIC_SURFACE_HPP
#define GTC_CUBIC_SURFACE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gtc/matrix.hpp"
#include "gtc/poly.hpp"

namespace gtc {

/// A cubic is reducible over the closure iff some plane divides it. Decided
/// on the four charts of the dual space by Groebner consistency.
[[nodiscard]] bool has_linear_factor(const MultiPoly& f);

enum class SurfaceClass { smooth, ade, simple_elliptic, non_normal, non_integral };
/// "smooth", "ADE", "simple-elliptic", "non-normal", "non-integral".
[[nodiscard]] std::string to_string(SurfaceClass c);

/// A singular point, or a set of `orbit_degree` conjugate points sharing
/// their local data.
struct SingularPoint {
    std::optional<std::vector<Rational>> point;  ///< first nonzero coordinate 1
    int orbit_degree = 1;
    std::string type;  ///< "A2", "D4", "E6", "Ẽ6", ...
    int tjurina = 0;
    int corank = 0;    ///< corank of the Hessian of the local equation
    /// Root pattern of the cubic term on the Hessian kernel when corank is 2:
    /// "distinct", "double" or "triple".
    std::optional<std::string> binary_cubic;
};

struct EllipticCone {
    std::vector<Rational> vertex;
    MultiPoly base;  ///< plane cubic in the three local coordinates
    bool smooth = false;
};

struct SurfaceReport {
    SurfaceClass cls = SurfaceClass::smooth;
    std::string configuration;  ///< canonical label for smooth and ADE, "Ẽ6" for the cone, else empty
    std::vector<SingularPoint> singularities;
    std::optional<std::pair<int, int>> families;  ///< (aCM, non-CM) for smooth and ADE
    std::optional<EllipticCone> cone;
    std::vector<std::string> notes;
};

/// Full decision tree: reducibility, smoothness, non-isolated singularities,
/// then the local analysis of every singular point.
[[nodiscard]] SurfaceReport classify(const MultiPoly& f);

/// Type of an isolated rational double point at p (any nonzero scaling).
/// Throws DomainError when p is not singular or the quadratic part vanishes,
/// InconsistencyError when corank and Tjurina number disagree.
[[nodiscard]] SingularPoint ade_type_at_point(const MultiPoly& f, const std::vector<Rational>& p);

/// Cone structure at a triple point p. Throws DomainError when the local
/// quadratic part does not vanish.
[[nodiscard]] EllipticCone simple_elliptic_check(const MultiPoly& f, const std::vector<Rational>& p);

/// Member t1^3 + t2^2 t3 + a t1^2 t3 + b t0 t1 t2 + c t0 t1^2 of the
/// non-normal slice family: "X6", "X7", "X8" or "X9" by the discriminant
/// a b^2 + c^2.
[[nodiscard]] std::string nonnormal_slice_classify(const Rational& a, const Rational& b, const Rational& c);
[[nodiscard]] MultiPoly nonnormal_slice_member(const Rational& a, const Rational& b, const Rational& c);

/// The scalar c with det(a) = c f, if any.
[[nodiscard]] std::optional<Rational> verify_detrep(const PolyMatrix& a, const MultiPoly& f);

/// Membership of a configuration label in the list of singularity
/// combinations of cubic surfaces with rational double points. A1+A4 is
/// accepted as well; ∅ stands for smooth surfaces.
[[nodiscard]] bool allowed_config_validate(std::string_view label);

/// Moves p to the origin of the affine chart x_c = 1 (c the first nonzero
/// coordinate of p): returns f(p + y) in three variables.
[[nodiscard]] MultiPoly local_equation(const MultiPoly& f, const std::vector<Rational>& p);

}  // namespace gtc

#endif
