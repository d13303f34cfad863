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


// Command-line front end. JSON on stdout by default, --pretty for tables.
// Exit codes: 0 ok, 1 input outside an operation's domain, 2 parse or usage
// error, 3 internal inconsistency, 4 table mismatch, 5 failed self-test.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "gtc/cubic_surface.hpp"
#include "gtc/error.hpp"
#include "gtc/kronecker.hpp"
#include "gtc/roots.hpp"
#include "gtc/selftest.hpp"
#include "gtc/twisted_cubics.hpp"

using json = nlohmann::ordered_json;
using namespace gtc;

namespace {

enum Exit { kOk = 0, kDomain = 1, kParse = 2, kInconsistent = 3, kMismatch = 4, kSelftest = 5 };

bool pretty = false;

// "-" or an empty argument reads the whole of stdin.
std::string input(const std::string& arg) {
    if (!arg.empty() && arg != "-") return arg;
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

json strings(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(q.to_string());
    return out;
}

std::string point_text(const std::vector<Rational>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ":" : "") + v[i].to_string();
    return s + "]";
}

// Left-justifies by code points so labels such as "∅" line up.
std::string pad(const std::string& s, std::size_t width) {
    std::size_t cps = 0;
    for (unsigned char ch : s) cps += (ch & 0xC0) != 0x80;
    return s + std::string(width > cps ? width - cps : 1, ' ');
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_classify(const std::string& text) {
    const SurfaceReport rep = classify(parse_poly(input(text)));
    if (pretty) {
        std::cout << "class: " << to_string(rep.cls) << '\n';
        if (!rep.configuration.empty()) std::cout << "configuration: " << rep.configuration << '\n';
        for (const auto& s : rep.singularities) {
            std::cout << "  " << (s.point ? point_text(*s.point) : "orbit of degree " + std::to_string(s.orbit_degree))
                      << "  " << s.type << "  tjurina " << s.tjurina << "  corank " << s.corank << '\n';
        }
        if (rep.families)
            std::cout << "families: " << rep.families->first << " aCM, " << rep.families->second << " non-CM\n";
        if (rep.cone)
            std::cout << "cone vertex " << point_text(rep.cone->vertex) << " over " << to_string(rep.cone->base, "y")
                      << (rep.cone->smooth ? " (smooth)" : " (singular)") << '\n';
        for (const auto& n : rep.notes) std::cout << "note: " << n << '\n';
        return kOk;
    }
    json j;
    j["class"] = to_string(rep.cls);
    j["configuration"] = rep.configuration;
    j["singularities"] = json::array();
    for (const auto& s : rep.singularities) {
        json e;
        if (s.point)
            e["point"] = strings(*s.point);
        else
            e["point"] = {{"orbit_of_degree", s.orbit_degree}};
        e["type"] = s.type;
        e["tjurina"] = s.tjurina;
        e["corank"] = s.corank;
        j["singularities"].push_back(std::move(e));
    }
    j["families"] = rep.families ? json{{"acm", rep.families->first}, {"noncm", rep.families->second}} : json(nullptr);
    j["notes"] = rep.notes;
    if (rep.cone)
        j["cone"] = {{"vertex", strings(rep.cone->vertex)},
                     {"base", to_string(rep.cone->base, "y")},
                     {"smooth", rep.cone->smooth}};
    emit(j);
    return kOk;
}

int cmd_table1() {
    const auto rows = table1();
    bool ok = true;
    json j = json::array();
    for (const auto& r : rows) {
        ok = ok && r.computed == r.expected;
        j.push_back({{"label", r.label}, {"type", r.type}, {"expected", r.expected}, {"computed", r.computed}});
    }
    if (pretty) {
        std::cout << pad("label", 10) << pad("type", 7) << pad("count", 9) << "published\n";
        for (const auto& r : rows)
            std::cout << pad(r.label, 10) << pad(r.type, 7) << pad(std::to_string(r.computed), 9) << r.expected
                      << (r.computed == r.expected ? "" : "  MISMATCH") << '\n';
    } else {
        emit(j);
    }
    return ok ? kOk : kMismatch;
}

int cmd_orbits(const std::string& label) {
    const SubsystemEmbedding emb = embed_subsystem(label);
    const OrbitDecomposition dec = weyl_orbits(emb);
    if (pretty) {
        std::cout << emb.label << ": " << dec.orbits.size() << " orbits, " << dec.effective_count() << " effective\n";
        for (const auto& o : dec.orbits)
            std::cout << "  " << std::setw(3) << o.roots.size() << (o.effective ? " effective " : "           ")
                      << "min " << to_string(o.minimal) << "  max " << to_string(o.maximal) << '\n';
        return kOk;
    }
    json j;
    j["configuration"] = emb.label;
    j["basis"] = json::array();
    for (const auto& r : emb.basis) j["basis"].push_back(to_string(r));
    j["orbits"] = json::array();
    for (const auto& o : dec.orbits)
        j["orbits"].push_back({{"size", o.roots.size()},
                               {"effective", o.effective},
                               {"minimal", to_string(o.minimal)},
                               {"maximal", to_string(o.maximal)}});
    j["effective"] = dec.effective_count();
    j["noneffective"] = dec.noneffective_count();
    emit(j);
    return kOk;
}

int cmd_stability(const std::string& text) {
    const PolyMatrix a = parse_matrix(input(text));
    const bool square = a.rows() == 3 && a.cols() == 3;
    const StabilityVerdict v = square ? stability_3x3(a) : semistable_3x2(a);
    json j;
    j["level"] = to_string(v.level);
    j["pattern"] = v.pattern ? json(*v.pattern) : json(nullptr);
    j["witness"] = v.witness ? json{{"left", to_string(v.witness->left)}, {"right", to_string(v.witness->right)}}
                             : json(nullptr);
    if (square) j["determinant"] = to_string(det_criterion(a));
    if (pretty) {
        std::cout << to_string(v.level);
        if (v.pattern) std::cout << "  pattern " << *v.pattern;
        std::cout << '\n';
        if (v.witness)
            std::cout << "  left  " << to_string(v.witness->left) << "\n  right " << to_string(v.witness->right) << '\n';
    } else {
        emit(j);
    }
    return kOk;
}

int cmd_detrep(const std::string& mtext, const std::string& ptext) {
    const auto scalar = verify_detrep(parse_matrix(input(mtext)), parse_poly(ptext));
    if (pretty)
        std::cout << (scalar ? "representation, det = " + scalar->to_string() + " * f" : "not a representation") << '\n';
    else
        emit({{"representation", scalar.has_value()}, {"scalar", scalar ? json(scalar->to_string()) : json(nullptr)}});
    return kOk;
}

int cmd_curve(const std::string& mtext, const std::string& cols, const std::string& surface) {
    const PolyMatrix a = parse_matrix(input(mtext));
    CurveIdeal c;
    if (a.rows() == 3 && a.cols() == 2) {
        if (!cols.empty() || !surface.empty()) throw DomainError("--cols and --surface apply to 3x3 matrices");
        c = minors_ideal(a);
    } else {
        const RatMatrix sel = parse_rat_matrix(cols.empty() ? "1,0; 0,1; 0,0" : cols);
        std::optional<MultiPoly> f;
        if (!surface.empty()) f = parse_poly(surface);
        c = column_family_curve(a, sel, f);
    }
    json gens = json::array();
    for (const auto& g : c.ideal.basis().polys) gens.push_back(to_string(g));
    if (pretty) {
        for (const auto& g : gens) std::cout << g.get<std::string>() << '\n';
        std::cout << "Hilbert polynomial " << c.hilbert.to_string() << (c.acm ? ", aCM" : ", not aCM") << '\n';
    } else {
        emit({{"generators", gens}, {"hilbert_polynomial", c.hilbert.to_string()}, {"acm", c.acm}});
    }
    return kOk;
}

int cmd_skewnormalize(const std::string& text) {
    const SkewNormalForm nf = skew_normalize(parse_matrix(input(text)));
    json u = json::array();
    for (const auto& ui : nf.u) u.push_back(to_string(ui));
    if (pretty)
        std::cout << "M = " << to_string(nf.m) << "\nu = (" << u[0].get<std::string>() << ", "
                  << u[1].get<std::string>() << ", " << u[2].get<std::string>() << ")\np = " << point_text(nf.point)
                  << '\n';
    else
        emit({{"M", to_string(nf.m)}, {"u", u}, {"point", strings(nf.point)}});
    return kOk;
}

int cmd_selftest(std::uint64_t seed) {
    const auto results = run_acceptance(seed);
    if (pretty) {
        for (const auto& r : results) std::cout << format_result(r, false) << '\n';
    } else {
        json j = json::array();
        for (const auto& r : results)
            j.push_back({{"criterion", r.id},
                         {"title", r.title},
                         {"status", r.excluded ? "excluded" : r.passed ? "pass" : "fail"},
                         {"detail", r.detail}});
        emit(j);
    }
    return all_passed(results) ? kOk : kSelftest;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cubic surfaces, determinantal representations and twisted cubics"};
    app.require_subcommand(1);
    auto* json_flag = app.add_flag("--json", "JSON output (default)");
    app.add_flag("--pretty", pretty, "Human-readable output")->excludes(json_flag);

    std::string a, b, cols, surface;
    std::uint64_t seed = kDefaultSeed;
    auto* classify_cmd = app.add_subcommand("classify", "Classify a cubic surface");
    classify_cmd->add_option("poly", a, "Cubic form in x0..x3 (or - for stdin)");
    auto* table_cmd = app.add_subcommand("table1", "Recompute the table of representation counts");
    auto* orbits_cmd = app.add_subcommand("orbits", "Weyl orbits of a root configuration");
    orbits_cmd->add_option("config", a, "Configuration such as 4A1")->required();
    auto* stab_cmd = app.add_subcommand("stability", "Stability of a 3x2 or 3x3 linear matrix");
    stab_cmd->add_option("matrix", a, "Rows separated by ';', entries by ','");
    auto* det_cmd = app.add_subcommand("detrep", "Check a determinantal representation");
    det_cmd->add_option("matrix", a)->required();
    det_cmd->add_option("poly", b)->required();
    auto* curve_cmd = app.add_subcommand("curve", "Curve ideal of a 3x2 matrix or a column family");
    curve_cmd->add_option("matrix", a);
    curve_cmd->add_option("--cols", cols, "Rational 3x2 or 2x3 column selection");
    curve_cmd->add_option("--surface", surface, "Surface equation, required for zero determinant");
    auto* skew_cmd = app.add_subcommand("skewnormalize", "Normal form M K(u) of a stable matrix with zero determinant");
    skew_cmd->add_option("matrix", a);
    auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance criteria");
    self_cmd->add_option("--seed", seed, "Seed of the randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*classify_cmd) return cmd_classify(a);
        if (*table_cmd) return cmd_table1();
        if (*orbits_cmd) return cmd_orbits(a);
        if (*stab_cmd) return cmd_stability(a);
        if (*det_cmd) return cmd_detrep(a, b);
        if (*curve_cmd) return cmd_curve(a, cols, surface);
        if (*skew_cmd) return cmd_skewnormalize(a);
        if (*self_cmd) return cmd_selftest(seed);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const InconsistencyError& e) {
        std::cerr << "inconsistency: " << e.what() << '\n';
        return kInconsistent;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    }
    return kParse;
}
