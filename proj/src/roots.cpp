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

#include "gtc/roots.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "gtc/error.hpp"

namespace gtc {

int dot(const RootVector& a, const RootVector& b) {
    int s = a.c[0] * b.c[0];
    for (int i = 1; i < 7; ++i) s -= a.c[i] * b.c[i];
    return s;
}

RootVector canonical_class() { return RootVector{{-3, 1, 1, 1, 1, 1, 1}}; }

RootVector reflect(const RootVector& b, const RootVector& a) { return b + dot(b, a) * a; }

std::string to_string(const RootVector& r) {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](int coef, const std::string& name) {
        if (coef == 0) return;
        if (coef < 0) os << "-";
        else if (!first) os << "+";
        if (std::abs(coef) != 1) os << std::abs(coef);
        os << name;
        first = false;
    };
    emit(r.c[0], "h");
    for (int i = 1; i < 7; ++i) emit(r.c[i], "e" + std::to_string(i));
    if (first) os << "0";
    return os.str();
}

const std::vector<RootVector>& generate_roots() {
    static const std::vector<RootVector> roots = [] {
        std::vector<RootVector> out;
        for (int i = 1; i <= 6; ++i)
            for (int j = 1; j <= 6; ++j) {
                if (i == j) continue;
                RootVector r;
                r.c[i] = 1;
                r.c[j] = -1;
                out.push_back(r);
            }
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                for (int k = j + 1; k <= 6; ++k) {
                    RootVector r{{1, 0, 0, 0, 0, 0, 0}};
                    r.c[i] = r.c[j] = r.c[k] = -1;
                    out.push_back(r);
                    out.push_back(-r);
                }
        const RootVector top{{2, -1, -1, -1, -1, -1, -1}};
        out.push_back(top);
        out.push_back(-top);
        std::sort(out.begin(), out.end());
        return out;
    }();
    return roots;
}

namespace {

std::size_t root_index(const RootVector& r) {
    const auto& roots = generate_roots();
    const auto it = std::lower_bound(roots.begin(), roots.end(), r);
    if (it == roots.end() || *it != r) throw InconsistencyError("vector is not a root: " + to_string(r));
    return static_cast<std::size_t>(it - roots.begin());
}

const std::vector<std::vector<int>>& dot_table() {
    static const std::vector<std::vector<int>> table = [] {
        const auto& roots = generate_roots();
        std::vector<std::vector<int>> t(roots.size(), std::vector<int>(roots.size()));
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = 0; j < roots.size(); ++j) t[i][j] = dot(roots[i], roots[j]);
        return t;
    }();
    return table;
}

}  // namespace

std::vector<DynkinComponent> parse_configuration(std::string_view label) {
    std::string s;
    for (char ch : label)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    std::vector<DynkinComponent> out;
    if (s.empty() || s == "∅" || s == "0" || s == "empty") return out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t end = std::min(s.find('+', pos), s.size());
        const std::string part = s.substr(pos, end - pos);
        std::size_t k = 0;
        int mult = 0;
        while (k < part.size() && std::isdigit(static_cast<unsigned char>(part[k]))) mult = mult * 10 + (part[k++] - '0');
        if (k == 0) mult = 1;
        if (k >= part.size() || mult == 0) throw ParseError("malformed configuration component '" + part + "'");
        const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(part[k++])));
        if (k >= part.size()) throw ParseError("configuration component without rank '" + part + "'");
        int rank = 0;
        for (; k < part.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(part[k])))
                throw ParseError("malformed configuration component '" + part + "'");
            rank = rank * 10 + (part[k] - '0');
        }
        const bool ok = (letter == 'A' && rank >= 1) || (letter == 'D' && rank >= 4) ||
                        (letter == 'E' && rank >= 6 && rank <= 8);
        if (!ok) throw ParseError("unknown Dynkin type '" + part + "'");
        for (int i = 0; i < mult; ++i) out.push_back({letter, rank});
        if (end == s.size()) break;
        pos = end + 1;
        if (pos == s.size()) throw ParseError("trailing '+' in configuration");
    }
    return out;
}

std::string configuration_label(std::vector<DynkinComponent> comps) {
    if (comps.empty()) return "∅";
    std::sort(comps.begin(), comps.end());
    std::ostringstream os;
    for (std::size_t i = 0; i < comps.size();) {
        std::size_t j = i;
        while (j < comps.size() && comps[j] == comps[i]) ++j;
        if (i > 0) os << "+";
        if (j - i > 1) os << (j - i);
        os << comps[i].letter << comps[i].rank;
        i = j;
    }
    return os.str();
}

std::string normalize_configuration(std::string_view label) { return configuration_label(parse_configuration(label)); }

int configuration_rank(const std::vector<DynkinComponent>& comps) {
    int r = 0;
    for (const auto& c : comps) r += c.rank;
    return r;
}

std::vector<std::vector<int>> cartan_matrix(const std::vector<DynkinComponent>& unsorted) {
    std::vector<DynkinComponent> comps = unsorted;
    std::sort(comps.begin(), comps.end());
    const int n = configuration_rank(comps);
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    int off = 0;
    for (const auto& comp : comps) {
        auto link = [&](int a, int b) { c[off + a][off + b] = c[off + b][off + a] = -1; };
        const int r = comp.rank;
        for (int i = 0; i < r; ++i) c[off + i][off + i] = 2;
        if (comp.letter == 'A') {
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
        } else if (comp.letter == 'D') {
            for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
            link(r - 3, r - 1);
        } else {
            // E_r, Bourbaki: 1-3-4-...-r with 2 attached to 4.
            link(0, 2);
            link(1, 3);
            for (int i = 2; i + 1 < r; ++i) link(i, i + 1);
        }
        off += r;
    }
    return c;
}

namespace {

// Lexicographic backtracking; `emit` returns false to stop.
template <class Emit>
void search_bases(const std::vector<std::vector<int>>& cartan, Emit&& emit) {
    const auto& roots = generate_roots();
    const auto& dt = dot_table();
    const std::size_t n = cartan.size();
    std::vector<std::size_t> chosen;
    bool stop = false;
    auto rec = [&](auto&& self) -> void {
        if (stop) return;
        const std::size_t k = chosen.size();
        if (k == n) {
            if (!emit(chosen)) stop = true;
            return;
        }
        for (std::size_t cand = 0; cand < roots.size() && !stop; ++cand) {
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) ok = dt[cand][chosen[j]] == -cartan[k][j];
            if (!ok) continue;
            chosen.push_back(cand);
            self(self);
            chosen.pop_back();
        }
    };
    rec(rec);
}

SubsystemEmbedding make_embedding(const std::string& label, const std::vector<std::size_t>& idx) {
    SubsystemEmbedding e;
    e.label = label;
    for (auto i : idx) e.basis.push_back(generate_roots()[i]);
    const std::size_t n = idx.size();
    e.cartan.assign(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e.cartan[i][j] = -dot(e.basis[i], e.basis[j]);
    return e;
}

}  // namespace

std::vector<SubsystemEmbedding> find_embeddings(std::string_view label, std::size_t limit) {
    const auto comps = parse_configuration(label);
    const std::string canon = configuration_label(comps);
    if (configuration_rank(comps) > 6) throw DomainError("configuration does not fit in E6: " + canon);
    const auto cartan = cartan_matrix(comps);
    std::vector<SubsystemEmbedding> out;
    std::set<std::vector<std::size_t>> seen;
    search_bases(cartan, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::size_t> key = idx;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) out.push_back(make_embedding(canon, idx));
        return out.size() < limit;
    });
    return out;
}

SubsystemEmbedding embed_subsystem(std::string_view label) {
    auto found = find_embeddings(label, 1);
    if (found.empty()) throw InconsistencyError("no embedding into E6 for " + normalize_configuration(label));
    return std::move(found.front());
}

bool is_valid_embedding(const SubsystemEmbedding& emb) {
    const auto target = cartan_matrix(parse_configuration(emb.label));
    if (target.size() != emb.basis.size()) return false;
    for (std::size_t i = 0; i < emb.basis.size(); ++i) {
        if (dot(emb.basis[i], emb.basis[i]) != -2 || dot(emb.basis[i], canonical_class()) != 0) return false;
        for (std::size_t j = 0; j < emb.basis.size(); ++j)
            if (-dot(emb.basis[i], emb.basis[j]) != target[i][j]) return false;
    }
    return true;
}

std::size_t OrbitDecomposition::effective_count() const {
    return static_cast<std::size_t>(std::count_if(orbits.begin(), orbits.end(), [](const Orbit& o) { return o.effective; }));
}

std::size_t OrbitDecomposition::noneffective_count() const { return orbits.size() - effective_count(); }

std::pair<RootVector, RootVector> extremal_roots(const std::vector<RootVector>& orbit, const SubsystemEmbedding& emb) {
    std::vector<RootVector> mins;
    std::vector<RootVector> maxs;
    for (const auto& r : orbit) {
        bool lo = true;
        bool hi = true;
        for (const auto& a : emb.basis) {
            const int d = dot(r, a);
            lo = lo && d >= 0;
            hi = hi && d <= 0;
        }
        if (lo) mins.push_back(r);
        if (hi) maxs.push_back(r);
    }
    if (mins.size() != 1 || maxs.size() != 1) throw InconsistencyError("extremal roots of an orbit are not unique");
    return {mins.front(), maxs.front()};
}

namespace {

std::vector<std::vector<std::size_t>> reflection_permutations(const SubsystemEmbedding& emb) {
    const auto& roots = generate_roots();
    std::vector<std::vector<std::size_t>> perms;
    for (const auto& a : emb.basis) {
        std::vector<std::size_t> p(roots.size());
        for (std::size_t i = 0; i < roots.size(); ++i) p[i] = root_index(reflect(roots[i], a));
        perms.push_back(std::move(p));
    }
    return perms;
}

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

OrbitDecomposition weyl_orbits(const SubsystemEmbedding& emb) {
    const auto& roots = generate_roots();
    std::vector<std::size_t> parent(roots.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& p : reflection_permutations(emb))
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const std::size_t a = find(parent, i);
            const std::size_t b = find(parent, p[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<std::size_t>> groups(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) groups[find(parent, i)].push_back(i);
    std::vector<bool> in_basis(roots.size(), false);
    for (const auto& a : emb.basis) in_basis[root_index(a)] = true;

    OrbitDecomposition dec;
    for (const auto& g : groups) {
        if (g.empty()) continue;
        Orbit o;
        for (auto i : g) {
            o.roots.push_back(roots[i]);
            o.effective = o.effective || in_basis[i];
        }
        std::tie(o.minimal, o.maximal) = extremal_roots(o.roots, emb);
        dec.orbits.push_back(std::move(o));
    }
    std::stable_sort(dec.orbits.begin(), dec.orbits.end(), [](const Orbit& a, const Orbit& b) {
        if (a.roots.size() != b.roots.size()) return a.roots.size() > b.roots.size();
        return a.roots.front() < b.roots.front();
    });
    return dec;
}

std::uint64_t weyl_group_order(const SubsystemEmbedding& emb) {
    const auto gens = reflection_permutations(emb);
    const std::size_t n = generate_roots().size();
    std::string id(n, '\0');
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<char>(i);
    std::unordered_set<std::string> seen{id};
    std::vector<std::string> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::string> next;
        for (const auto& w : frontier)
            for (const auto& s : gens) {
                std::string ws(n, '\0');
                for (std::size_t i = 0; i < n; ++i) ws[i] = static_cast<char>(s[static_cast<unsigned char>(w[i])]);
                if (seen.insert(ws).second) next.push_back(std::move(ws));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

const std::vector<Table1Row>& table1_reference() {
    static const std::vector<Table1Row> rows = {
        {"∅", "I", 72},       {"A1", "II", 50},        {"2A1", "IV", 34},      {"A2", "III", 30},
        {"3A1", "VIII", 22},  {"A1+A2", "VI", 20},     {"A3", "V", 16},        {"4A1", "XVI", 13},
        {"2A1+A2", "XIII", 12}, {"A1+A3", "X", 10},    {"2A2", "IX", 12},      {"A4", "VII", 8},
        {"D4", "XII", 6},     {"2A1+A3", "XVIII", 5},  {"A1+2A2", "XVII", 6},  {"A1+A4", "XIV", 4},
        {"A5", "XI", 4},      {"D5", "XV", 2},         {"A1+A5", "XIX", 1},    {"3A2", "XXI", 2},
        {"E6", "XX", 0},
    };
    return rows;
}

std::vector<Table1Entry> table1() {
    std::vector<Table1Entry> out;
    for (const auto& row : table1_reference()) {
        const auto dec = weyl_orbits(embed_subsystem(row.label));
        out.push_back({row.label, row.type, row.count, static_cast<int>(dec.noneffective_count())});
    }
    return out;
}

std::pair<int, int> family_counts(std::string_view label) {
    const auto dec = weyl_orbits(embed_subsystem(label));
    return {static_cast<int>(dec.noneffective_count()), static_cast<int>(dec.effective_count())};
}

}  // namespace gtc
