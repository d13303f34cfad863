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


#include <doctest.h>

#include <algorithm>
#include <set>

#include "gtc/error.hpp"
#include "gtc/roots.hpp"

using namespace gtc;

namespace {

RootVector R(std::initializer_list<int> c) {
    RootVector r;
    std::copy(c.begin(), c.end(), r.c.begin());
    return r;
}

// Orbit of r by closing under the basis reflections, without any lookup table.
std::set<RootVector> closure_orbit(const RootVector& r, const std::vector<RootVector>& basis) {
    std::set<RootVector> seen{r};
    std::vector<RootVector> todo{r};
    while (!todo.empty()) {
        const RootVector x = todo.back();
        todo.pop_back();
        for (const auto& a : basis) {
            const RootVector y = reflect(x, a);
            if (seen.insert(y).second) todo.push_back(y);
        }
    }
    return seen;
}

std::vector<std::size_t> orbit_sizes(const OrbitDecomposition& d) {
    std::vector<std::size_t> s;
    for (const auto& o : d.orbits) s.push_back(o.roots.size());
    return s;
}

}  // namespace

TEST_CASE("the 72 roots") {
    const auto& roots = generate_roots();
    REQUIRE(roots.size() == 72);
    CHECK(std::is_sorted(roots.begin(), roots.end()));
    CHECK(std::adjacent_find(roots.begin(), roots.end()) == roots.end());
    for (const auto& r : roots) {
        CHECK(dot(r, r) == -2);
        CHECK(dot(r, canonical_class()) == 0);
        CHECK(std::binary_search(roots.begin(), roots.end(), -r));
    }
    CHECK(std::binary_search(roots.begin(), roots.end(), R({0, 1, -1, 0, 0, 0, 0})));
    CHECK(dot(canonical_class(), canonical_class()) == 3);
    CHECK(to_string(R({1, -1, -1, -1, 0, 0, 0})) == "h-e1-e2-e3");
    CHECK(to_string(R({2, -1, -1, -1, -1, -1, -1})) == "2h-e1-e2-e3-e4-e5-e6");
}

TEST_CASE("reflections are isometries permuting the roots") {
    const auto& roots = generate_roots();
    for (const auto& a : roots)
        for (std::size_t i = 0; i < roots.size(); i += 7) {
            const RootVector b = reflect(roots[i], a);
            CHECK(std::binary_search(roots.begin(), roots.end(), b));
            CHECK(reflect(b, a) == roots[i]);
            for (std::size_t j = 0; j < roots.size(); j += 11) CHECK(dot(b, reflect(roots[j], a)) == dot(roots[i], roots[j]));
        }
    CHECK(reflect(R({0, 1, -1, 0, 0, 0, 0}), R({0, 1, -1, 0, 0, 0, 0})) == R({0, -1, 1, 0, 0, 0, 0}));
}

TEST_CASE("configuration labels") {
    CHECK(normalize_configuration("A1+A1+A3") == "2A1+A3");
    CHECK(normalize_configuration("A3+2A1") == "2A1+A3");
    CHECK(normalize_configuration(" a2 + a1 ") == "A1+A2");
    CHECK(normalize_configuration("empty") == "∅");
    CHECK(normalize_configuration("∅") == "∅");
    CHECK(normalize_configuration("0") == "∅");
    CHECK(configuration_rank(parse_configuration("A1+2A2")) == 5);
    CHECK_THROWS_AS((void)parse_configuration("B2"), ParseError);
    CHECK_THROWS_AS((void)parse_configuration("D3"), ParseError);
    CHECK_THROWS_AS((void)parse_configuration("A1+"), ParseError);
    CHECK_THROWS_AS((void)parse_configuration("2A"), ParseError);
    CHECK_THROWS_AS((void)embed_subsystem("7A1"), DomainError);
    CHECK_THROWS_AS((void)embed_subsystem("E7"), DomainError);
    CHECK_THROWS_AS((void)embed_subsystem("5A1"), InconsistencyError);
}

TEST_CASE("Cartan matrices") {
    const auto d4 = cartan_matrix(parse_configuration("D4"));
    const std::vector<std::vector<int>> d4_expected = {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
    CHECK(d4 == d4_expected);
    const auto e6 = cartan_matrix(parse_configuration("E6"));
    int edges = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) edges += e6[i][j] == -1;
    CHECK(edges == 5);
    CHECK(e6[1][3] == -1);
    CHECK(e6[0][2] == -1);
    CHECK(std::count(e6[3].begin(), e6[3].end(), -1) == 3);
}

TEST_CASE("every listed configuration embeds") {
    for (const auto& row : table1_reference()) {
        const auto emb = embed_subsystem(row.label);
        CHECK(emb.label == normalize_configuration(row.label));
        CHECK(is_valid_embedding(emb));
        CHECK(static_cast<int>(emb.basis.size()) == configuration_rank(parse_configuration(row.label)));
    }
    SubsystemEmbedding bad = embed_subsystem("A2");
    bad.basis[1] = -bad.basis[1];
    CHECK_FALSE(is_valid_embedding(bad));
}

TEST_CASE("orbit decompositions") {
    const auto empty = weyl_orbits(embed_subsystem("∅"));
    CHECK(empty.orbits.size() == 72);
    CHECK(empty.effective_count() == 0);

    const auto four = weyl_orbits(embed_subsystem("4A1"));
    std::vector<std::size_t> expected(1, 16);
    expected.insert(expected.end(), 12, 4);
    expected.insert(expected.end(), 4, 2);
    CHECK(orbit_sizes(four) == expected);
    CHECK(four.effective_count() == 4);
    for (const auto& o : four.orbits) CHECK(o.effective == (o.roots.size() == 2));

    const auto e6 = weyl_orbits(embed_subsystem("E6"));
    CHECK(e6.orbits.size() == 1);
    CHECK(e6.noneffective_count() == 0);

    // Against a closure oracle on several configurations.
    for (const char* label : {"A1", "3A1", "2A2", "D4", "A1+A5", "3A2"}) {
        const auto emb = embed_subsystem(label);
        const auto dec = weyl_orbits(emb);
        std::size_t total = 0;
        for (const auto& o : dec.orbits) {
            const auto ref = closure_orbit(o.roots.front(), emb.basis);
            CHECK(std::vector<RootVector>(ref.begin(), ref.end()) == o.roots);
            total += o.roots.size();
        }
        CHECK(total == 72);
    }
}

TEST_CASE("extremal roots") {
    const std::vector<RootVector> basis = {R({0, 1, -1, 0, 0, 0, 0}), R({0, 0, 1, -1, 0, 0, 0}), R({0, 0, 0, 1, -1, 0, 0}),
                                           R({0, 0, 0, 0, 1, -1, 0}), R({0, 0, 0, 0, 0, 1, -1}), R({1, -1, -1, -1, 0, 0, 0})};
    SubsystemEmbedding e6{"E6", basis, {}};
    const auto& roots = generate_roots();
    const auto [lo, hi] = extremal_roots(roots, e6);
    // Highest root: r.ai <= 0 for all, i.e. dominant for the form -(.,.).
    CHECK(lo == R({-2, 1, 1, 1, 1, 1, 1}));
    CHECK(hi == R({2, -1, -1, -1, -1, -1, -1}));

    for (const char* label : {"A3", "2A1+A2", "D5"}) {
        const auto emb = embed_subsystem(label);
        for (const auto& o : weyl_orbits(emb).orbits) {
            for (const auto& a : emb.basis) {
                CHECK(dot(o.minimal, a) >= 0);
                CHECK(dot(o.maximal, a) <= 0);
            }
            CHECK(std::binary_search(o.roots.begin(), o.roots.end(), o.minimal));
            CHECK(std::binary_search(o.roots.begin(), o.roots.end(), o.maximal));
        }
    }
    const std::vector<RootVector> pair = {basis[0], basis[1]};
    CHECK_THROWS_AS((void)extremal_roots(pair, e6), InconsistencyError);
}

TEST_CASE("Weyl group orders") {
    CHECK(weyl_group_order(embed_subsystem("∅")) == 1);
    CHECK(weyl_group_order(embed_subsystem("A1")) == 2);
    CHECK(weyl_group_order(embed_subsystem("3A2")) == 216);
    CHECK(weyl_group_order(embed_subsystem("D4")) == 192);
    CHECK(weyl_group_order(embed_subsystem("A5")) == 720);
    CHECK(weyl_group_order(embed_subsystem("E6")) == 51840);
}

TEST_CASE("orbit counts do not depend on the embedding") {
    for (const auto& row : table1_reference()) {
        CAPTURE(row.label);
        const auto embs = find_embeddings(row.label, 3);
        REQUIRE(!embs.empty());
        if (row.label == "∅") continue;
        REQUIRE(embs.size() == 3);
        std::set<std::vector<RootVector>> bases;
        for (const auto& e : embs) {
            CHECK(is_valid_embedding(e));
            auto b = e.basis;
            std::sort(b.begin(), b.end());
            bases.insert(b);
        }
        CHECK(bases.size() == 3);
        const auto ref = orbit_sizes(weyl_orbits(embs[0]));
        for (const auto& e : embs) CHECK(orbit_sizes(weyl_orbits(e)) == ref);
    }
}

TEST_CASE("table and family counts") {
    const auto rows = table1();
    REQUIRE(rows.size() == 21);
    for (const auto& r : rows) {
        INFO(r.label);
        CHECK(r.computed == r.expected);
    }
    CHECK(family_counts("3A2") == std::pair{2, 3});
    CHECK(family_counts("∅") == std::pair{72, 0});
    CHECK(family_counts("A1") == std::pair{50, 1});
    CHECK(family_counts("E6") == std::pair{0, 1});
}
