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


#ifndef GTC_KRONECKER_HPP
#define GTC_KRONECKER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gtc/groebner.hpp"
#include "gtc/matrix.hpp"

namespace gtc {

// Matrices of linear forms in x0..x3 act on C^n -> C^m (x) W. The group acts
// by A -> g A h^-1; zero patterns below are named by their display,
// rows separated by ';'.

namespace pattern {
inline constexpr std::string_view kLowerLeft32 = "(*,*;0,*;0,*)";
inline constexpr std::string_view kZeroRow32 = "(*,*;*,*;0,0)";
inline constexpr std::string_view kZeroColumn = "(0,*,*;0,*,*;0,*,*)";
inline constexpr std::string_view kZeroRow = "(*,*,*;*,*,*;0,0,0)";
inline constexpr std::string_view kZeroBlock = "(*,*,*;0,0,*;0,0,*)";
inline constexpr std::string_view kColumnIntoLine = "(*,*,*;0,*,*;0,*,*)";
inline constexpr std::string_view kRowIntoLine = "(*,*,*;*,*,*;0,0,*)";
}  // namespace pattern

/// True iff every position marked 0 in the display holds a zero entry.
[[nodiscard]] bool matches_pattern(const PolyMatrix& a, std::string_view display);

/// Throws DomainError unless `a` is rows x cols over 4 variables with every
/// nonzero entry a linear form.
void require_linear_matrix(const PolyMatrix& a, std::size_t rows, std::size_t cols);

enum class StabilityLevel { unstable, semistable, stable };
/// "unstable", "semistable-not-stable" or "stable".
[[nodiscard]] std::string to_string(StabilityLevel level);

/// Rational row and column operations exhibiting a pattern: left * A * right
/// matches it literally.
struct StabilityWitness {
    RatMatrix left;
    RatMatrix right;
};

struct StabilityVerdict {
    StabilityLevel level = StabilityLevel::stable;
    std::optional<std::string> pattern;        ///< violated pattern display
    std::optional<StabilityWitness> witness;   ///< found by exact or small-height search
    std::optional<GroebnerBasis> proof;        ///< basis of a consistent minor system
};

/// Semistability of a 3x2 matrix; semistable and stable agree here.
[[nodiscard]] StabilityVerdict semistable_3x2(const PolyMatrix& a0);
/// The five pattern tests for a 3x3 matrix, decided over the closure.
[[nodiscard]] StabilityVerdict stability_3x3(const PolyMatrix& a);

enum class DetVerdict { inconclusive, semistable_at_least, stable_at_least };
[[nodiscard]] std::string to_string(DetVerdict v);
/// det != 0 gives semistability, an irreducible det stability.
[[nodiscard]] DetVerdict det_criterion(const PolyMatrix& a);

/// B = v * u^t for a nonzero polynomial matrix with vanishing 2x2 minors.
/// Column gcds are monic, so v is the common primitive column. Throws
/// DomainError for B = 0 or a nonzero minor.
[[nodiscard]] std::pair<std::vector<MultiPoly>, std::vector<MultiPoly>> rank1_factorize(const PolyMatrix& b);

/// Koszul matrix of u = (u1, u2, u3): (0,u3,-u2; -u3,0,u1; u2,-u1,0), the
/// skew matrix whose rows are the syzygies of u.
[[nodiscard]] PolyMatrix koszul_matrix(const std::vector<MultiPoly>& u);

struct SkewNormalForm {
    RatMatrix m;                  ///< invertible, a = m * koszul_matrix(u)
    std::vector<MultiPoly> u;     ///< independent linear forms, a u = 0, u[0] monic
    std::vector<Rational> point;  ///< V(u), first nonzero coordinate 1
};

/// Normal form of a stable matrix with zero determinant. Throws DomainError
/// when a is not stable or det(a) != 0 and InconsistencyError when a step the
/// theory guarantees fails.
[[nodiscard]] SkewNormalForm skew_normalize(const PolyMatrix& a);

}  // namespace gtc

#endif
