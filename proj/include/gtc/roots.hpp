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

#ifndef GTC_ROOTS_HPP
#define GTC_ROOTS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gtc {

/// Vector in the lattice Z^{1,6} with basis (h, e1, ..., e6) and form
/// diag(+1, -1, ..., -1). The E6 roots are the (-2)-vectors orthogonal to
/// K = (-3, 1, ..., 1).
struct RootVector {
    std::array<int, 7> c{};

    friend auto operator<=>(const RootVector&, const RootVector&) = default;
    friend RootVector operator+(RootVector a, const RootVector& b) {
        for (int i = 0; i < 7; ++i) a.c[i] += b.c[i];
        return a;
    }
    friend RootVector operator-(RootVector a) {
        for (int& x : a.c) x = -x;
        return a;
    }
    friend RootVector operator*(int k, RootVector a) {
        for (int& x : a.c) x *= k;
        return a;
    }
};

[[nodiscard]] int dot(const RootVector& a, const RootVector& b);
[[nodiscard]] RootVector canonical_class();
/// Reflection in the root a: b + (b.a) a.
[[nodiscard]] RootVector reflect(const RootVector& b, const RootVector& a);
/// Readable form such as "h-e1-e2-e3".
[[nodiscard]] std::string to_string(const RootVector& r);

/// The 72 roots in lexicographic coordinate order.
[[nodiscard]] const std::vector<RootVector>& generate_roots();

/// One Dynkin component such as A3 or D5.
struct DynkinComponent {
    char letter;
    int rank;
    friend auto operator<=>(const DynkinComponent&, const DynkinComponent&) = default;
};

/// Parses labels such as "2A1+A3", "A1+A1+A3", "∅" (also "0" or "empty").
/// Throws ParseError on malformed or non-existent types.
[[nodiscard]] std::vector<DynkinComponent> parse_configuration(std::string_view label);
/// Canonical label: components sorted by (letter, rank), repeated ones
/// merged with a multiplicity prefix; "∅" for the empty configuration.
[[nodiscard]] std::string configuration_label(std::vector<DynkinComponent> comps);
[[nodiscard]] std::string normalize_configuration(std::string_view label);
[[nodiscard]] int configuration_rank(const std::vector<DynkinComponent>& comps);

/// Root basis of a sub-root-system with its Cartan matrix -(ai.aj).
struct SubsystemEmbedding {
    std::string label;
    std::vector<RootVector> basis;
    std::vector<std::vector<int>> cartan;
};

/// Target Cartan matrix in Bourbaki numbering, block diagonal by component.
[[nodiscard]] std::vector<std::vector<int>> cartan_matrix(const std::vector<DynkinComponent>& comps);

/// First embedding in lexicographic backtracking order. Throws DomainError
/// for unknown labels and InconsistencyError when no embedding exists.
[[nodiscard]] SubsystemEmbedding embed_subsystem(std::string_view label);
/// Up to `limit` embeddings with pairwise different root sets of the basis.
[[nodiscard]] std::vector<SubsystemEmbedding> find_embeddings(std::string_view label, std::size_t limit);
/// Checks the basis against the Cartan matrix of its label.
[[nodiscard]] bool is_valid_embedding(const SubsystemEmbedding& emb);

struct Orbit {
    std::vector<RootVector> roots;  ///< sorted
    bool effective = false;         ///< contained in the subsystem spanned by the basis
    RootVector minimal;             ///< unique root with r.ai >= 0 for all basis roots
    RootVector maximal;             ///< unique root with r.ai <= 0 for all basis roots
};

struct OrbitDecomposition {
    std::vector<Orbit> orbits;  ///< sorted by decreasing size, then by first root
    [[nodiscard]] std::size_t effective_count() const;
    [[nodiscard]] std::size_t noneffective_count() const;
};

/// Orbits of the Weyl group of the subsystem on all 72 roots.
[[nodiscard]] OrbitDecomposition weyl_orbits(const SubsystemEmbedding& emb);
/// (minimal, maximal) root of an orbit; throws InconsistencyError unless both
/// are unique.
[[nodiscard]] std::pair<RootVector, RootVector> extremal_roots(const std::vector<RootVector>& orbit,
                                                               const SubsystemEmbedding& emb);
/// Order of the group generated by the basis reflections, by closure over
/// permutations of the 72 roots.
[[nodiscard]] std::uint64_t weyl_group_order(const SubsystemEmbedding& emb);

/// One row of the table of determinantal representation counts.
struct Table1Row {
    std::string label;
    std::string type;  ///< Roman numeral type of the singular cubic
    int count;         ///< published number of orbits outside the subsystem
};
/// The 21 published rows in their printed order.
[[nodiscard]] const std::vector<Table1Row>& table1_reference();

struct Table1Entry {
    std::string label;
    std::string type;
    int expected;
    int computed;
};
/// Recomputes every row from embeddings and orbit decompositions.
[[nodiscard]] std::vector<Table1Entry> table1();

/// (aCM families, non-CM families) = (non-effective, effective orbit counts).
[[nodiscard]] std::pair<int, int> family_counts(std::string_view label);

}  // namespace gtc

#endif
