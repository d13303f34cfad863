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

#include "gtc/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gtc/error.hpp"

namespace gtc {

// ---------------------------------------------------------------------------
// Term orders

TermOrder TermOrder::elimination(std::span<const bool> eliminated) {
    std::array<bool, kMaxVars> b{};
    if (eliminated.size() > static_cast<std::size_t>(kMaxVars)) throw DomainError("too many variables");
    std::copy(eliminated.begin(), eliminated.end(), b.begin());
    return TermOrder(Kind::elimination, b);
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::grevlex:
            return grevlex_compare(a, b);
        case Kind::lex:
            for (int i = 0; i < kMaxVars; ++i)
                if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
            return 0;
        case Kind::elimination: {
            int da = 0;
            int db = 0;
            for (int i = 0; i < kMaxVars; ++i)
                if (block_[i]) {
                    da += a.exp[i];
                    db += b.exp[i];
                }
            if (da != db) return da > db ? 1 : -1;
            return grevlex_compare(a, b);
        }
    }
    return 0;
}

std::string TermOrder::name() const {
    switch (kind_) {
        case Kind::grevlex:
            return "grevlex";
        case Kind::lex:
            return "lex";
        case Kind::elimination:
            return "elimination";
    }
    return "";
}

const MultiPoly::Term& leading_term(const MultiPoly& p, const TermOrder& order) {
    if (p.is_zero()) throw DomainError("leading term of zero");
    if (order.kind() == TermOrder::Kind::grevlex) return p.terms().front();
    const MultiPoly::Term* best = &p.terms().front();
    for (const auto& t : p.terms())
        if (order.compare(t.mono, best->mono) > 0) best = &t;
    return *best;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& p : polys) out.push_back(leading_term(p, order).mono);
    return out;
}

// ---------------------------------------------------------------------------
// Audit log

namespace {
thread_local bool audit_on = false;
thread_local std::vector<GroebnerBasis> audit_log;
}  // namespace

void GroebnerAudit::enable(bool on) { audit_on = on; }
bool GroebnerAudit::enabled() { return audit_on; }
void GroebnerAudit::record(const GroebnerBasis& gb) {
    if (audit_on) audit_log.push_back(gb);
}
std::vector<GroebnerBasis> GroebnerAudit::take() {
    std::vector<GroebnerBasis> out = std::move(audit_log);
    audit_log.clear();
    return out;
}

// ---------------------------------------------------------------------------
// Buchberger engine

namespace {

using Terms = std::vector<MultiPoly::Term>;

struct GPoly {
    Terms t;  // decreasing under the engine's order, monic
    int sugar = 0;
    [[nodiscard]] const Monomial& lm() const { return t.front().mono; }
};

class Engine {
   public:
    Engine(int nvars, const TermOrder& order) : nvars_(nvars), ord_(order) {}

    [[nodiscard]] Terms sorted(const MultiPoly& p) const {
        Terms t = p.terms();
        if (ord_.kind() != TermOrder::Kind::grevlex)
            std::sort(t.begin(), t.end(),
                      [this](const auto& a, const auto& b) { return ord_.compare(a.mono, b.mono) > 0; });
        return t;
    }

    [[nodiscard]] MultiPoly to_poly(const Terms& t) const { return MultiPoly::from_terms(nvars_, t); }

    static void make_monic(Terms& t) {
        if (t.empty() || t.front().coeff.is_one()) return;
        const Rational inv = Rational(1) / t.front().coeff;
        for (auto& x : t) x.coeff *= inv;
    }

    // a[from..] - c * m * b
    [[nodiscard]] Terms sub_mul(const Terms& a, std::size_t from, const Rational& c, const Monomial& m,
                                const Terms& b) const {
        Terms out;
        out.reserve(a.size() - from + b.size());
        std::size_t i = from;
        std::size_t j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size()) {
                out.push_back(a[i++]);
                continue;
            }
            const Monomial bm = b[j].mono * m;
            if (i == a.size()) {
                out.push_back({bm, -c * b[j].coeff});
                ++j;
                continue;
            }
            const int cmp = ord_.compare(a[i].mono, bm);
            if (cmp > 0) {
                out.push_back(a[i++]);
            } else if (cmp < 0) {
                out.push_back({bm, -c * b[j].coeff});
                ++j;
            } else {
                Rational v = a[i].coeff - c * b[j].coeff;
                if (!v.is_zero()) out.push_back({bm, std::move(v)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    // Full reduction of p by the reducers; updates the sugar.
    [[nodiscard]] Terms reduce(Terms p, const std::vector<const GPoly*>& reducers, int& sugar) const {
        Terms result;
        std::size_t i = 0;
        while (i < p.size()) {
            const GPoly* r = nullptr;
            for (const GPoly* g : reducers)
                if (g->lm().divides(p[i].mono) && (r == nullptr || g->t.size() < r->t.size())) r = g;
            if (r == nullptr) {
                result.push_back(std::move(p[i]));
                ++i;
                continue;
            }
            const Monomial m = p[i].mono / r->lm();
            sugar = std::max(sugar, r->sugar + weight(m));
            const Rational c = p[i].coeff;
            p = sub_mul(p, i, c, m, r->t);
            i = 0;
        }
        return result;
    }

    [[nodiscard]] Terms spoly(const GPoly& a, const GPoly& b, const Monomial& l) const {
        const Monomial ma = l / a.lm();
        const Monomial mb = l / b.lm();
        Terms left;
        left.reserve(a.t.size());
        for (const auto& t : a.t) left.push_back({t.mono * ma, t.coeff});
        Terms s = sub_mul(left, 0, Rational(1), mb, b.t);
        return s;
    }

    [[nodiscard]] int compare(const Monomial& a, const Monomial& b) const { return ord_.compare(a, b); }

    // Sugar degree; eliminated variables weigh zero so that t*I + (1-t)*J
    // stays graded for homogeneous I and J.
    [[nodiscard]] int weight(const Monomial& m) const {
        if (ord_.kind() != TermOrder::Kind::elimination) return m.deg;
        int w = 0;
        for (int i = 0; i < nvars_; ++i)
            if (!ord_.block()[i]) w += m.exp[i];
        return w;
    }
    [[nodiscard]] int weight(const Terms& t) const {
        int w = 0;
        for (const auto& x : t) w = std::max(w, weight(x.mono));
        return w;
    }
    [[nodiscard]] int nvars() const { return nvars_; }

   private:
    int nvars_;
    TermOrder ord_;
};

struct Pair {
    int i;  // -1 marks an input generator stored in `input`
    int j;
    Monomial lcm;
    int sugar;
    std::size_t serial;
    Terms input;
};

GroebnerBasis run_buchberger(std::span<const MultiPoly> gens, int nvars, const TermOrder& order) {
    Engine eng(nvars, order);
    GroebnerBasis out;
    out.nvars = nvars;
    out.order = order;

    std::vector<GPoly> g;
    std::vector<bool> redundant;
    std::vector<Pair> pairs;
    std::size_t serial = 0;

    for (const auto& p : gens) {
        if (p.nvars() != nvars) throw DomainError("generator ring mismatch");
        if (p.is_zero()) continue;
        if (p.is_constant()) {
            out.polys = {MultiPoly::constant(nvars, 1)};
            return out;
        }
        Pair q{-1, -1, Monomial{}, 0, serial++, eng.sorted(p)};
        q.sugar = eng.weight(q.input);
        q.lcm = q.input.front().mono;
        pairs.push_back(std::move(q));
    }

    auto update = [&](int h) {
        const Monomial& lh = g[h].lm();
        // Chain criterion on pending pairs.
        std::erase_if(pairs, [&](const Pair& p) {
            if (p.i < 0 || !lh.divides(p.lcm)) return false;
            return !(lcm(g[p.i].lm(), lh) == p.lcm) && !(lcm(g[p.j].lm(), lh) == p.lcm);
        });
        struct Cand {
            int i;
            Monomial l;
            bool copr;
            bool keep = true;
        };
        std::vector<Cand> cand;
        for (int i = 0; i < h; ++i) {
            if (redundant[i]) continue;
            cand.push_back({i, lcm(g[i].lm(), lh), coprime(g[i].lm(), lh)});
        }
        // Remove pairs whose lcm is a proper multiple of another new lcm.
        for (auto& a : cand)
            for (const auto& b : cand)
                if (&a != &b && b.l.divides(a.l) && !(b.l == a.l)) {
                    a.keep = false;
                    break;
                }
        // Among equal lcms keep one; discard the class if any member is coprime.
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (!cand[a].keep) continue;
            bool any_coprime = cand[a].copr;
            for (std::size_t b = a + 1; b < cand.size(); ++b)
                if (cand[b].keep && cand[b].l == cand[a].l) {
                    any_coprime = any_coprime || cand[b].copr;
                    cand[b].keep = false;
                }
            if (any_coprime) cand[a].keep = false;
        }
        for (const auto& c : cand) {
            if (!c.keep) continue;
            const int s = std::max(g[c.i].sugar + eng.weight(c.l / g[c.i].lm()), g[h].sugar + eng.weight(c.l / lh));
            pairs.push_back({c.i, h, c.l, s, serial++, {}});
        }
        for (int i = 0; i < h; ++i)
            if (!redundant[i] && lh.divides(g[i].lm())) redundant[i] = true;
    };

    while (!pairs.empty()) {
        auto best = pairs.begin();
        for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
            if (it->sugar != best->sugar) {
                if (it->sugar < best->sugar) best = it;
                continue;
            }
            const int c = eng.compare(it->lcm, best->lcm);
            if (c < 0 || (c == 0 && it->serial < best->serial)) best = it;
        }
        Pair p = std::move(*best);
        pairs.erase(best);

        Terms s;
        int sugar = p.sugar;
        if (p.i < 0) s = std::move(p.input);
        else s = eng.spoly(g[p.i], g[p.j], p.lcm);

        std::vector<const GPoly*> reducers;
        for (std::size_t k = 0; k < g.size(); ++k)
            if (!redundant[k]) reducers.push_back(&g[k]);
        Terms r = eng.reduce(std::move(s), reducers, sugar);
        if (r.empty()) continue;
        if (r.front().mono.is_one()) {
            out.polys = {MultiPoly::constant(nvars, 1)};
            return out;
        }
        Engine::make_monic(r);
        g.push_back({std::move(r), sugar});
        redundant.push_back(false);
        update(static_cast<int>(g.size()) - 1);
    }

    // Interreduce the minimal basis.
    std::vector<const GPoly*> minimal;
    for (std::size_t k = 0; k < g.size(); ++k)
        if (!redundant[k]) minimal.push_back(&g[k]);
    std::vector<GPoly> reduced;
    for (const GPoly* a : minimal) {
        std::vector<const GPoly*> others;
        for (const GPoly* b : minimal)
            if (b != a) others.push_back(b);
        Terms tail(a->t.begin() + 1, a->t.end());
        int sugar = a->sugar;
        Terms rt = eng.reduce(std::move(tail), others, sugar);
        Terms full;
        full.reserve(rt.size() + 1);
        full.push_back(a->t.front());
        full.insert(full.end(), rt.begin(), rt.end());
        reduced.push_back({std::move(full), sugar});
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const GPoly& a, const GPoly& b) { return eng.compare(a.lm(), b.lm()) < 0; });
    for (const auto& r : reduced) out.polys.push_back(eng.to_poly(r.t));
    return out;
}

// Normal forms against a fixed basis.
class Reducer {
   public:
    explicit Reducer(const GroebnerBasis& gb) : eng_(gb.nvars, gb.order) {
        for (const auto& p : gb.polys) polys_.push_back({eng_.sorted(p), 0});
        for (const auto& p : polys_) ptrs_.push_back(&p);
    }
    [[nodiscard]] MultiPoly nf(const MultiPoly& p) const {
        int sugar = 0;
        return eng_.to_poly(eng_.reduce(eng_.sorted(p), ptrs_, sugar));
    }

   private:
    Engine eng_;
    std::vector<GPoly> polys_;
    std::vector<const GPoly*> ptrs_;
};

}  // namespace

GroebnerBasis groebner_basis(std::span<const MultiPoly> gens, int nvars, const TermOrder& order) {
    GroebnerBasis gb = run_buchberger(gens, nvars, order);
    GroebnerAudit::record(gb);
    return gb;
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb) {
    if (p.nvars() != gb.nvars) throw DomainError("normal form ring mismatch");
    return Reducer(gb).nf(p);
}

// ---------------------------------------------------------------------------
// Ideals

Ideal::Ideal(int nvars, std::vector<MultiPoly> generators) : nvars_(nvars) {
    for (auto& g : generators) {
        if (g.nvars() != nvars) throw DomainError("ideal generator ring mismatch");
        if (g.is_zero()) continue;
        homogeneous_ = homogeneous_ && g.is_homogeneous();
        gens_.push_back(std::move(g));
    }
    gb_ = std::make_shared<const GroebnerBasis>(groebner_basis(gens_, nvars_));
}

bool Ideal::contains(const MultiPoly& p) const { return normal_form(p, *gb_).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
    const Reducer r(*gb_);
    return std::all_of(other.gb_->polys.begin(), other.gb_->polys.end(),
                       [&](const MultiPoly& p) { return r.nf(p).is_zero(); });
}

bool operator==(const Ideal& a, const Ideal& b) { return a.nvars_ == b.nvars_ && a.gb_->polys == b.gb_->polys; }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    std::vector<MultiPoly> g = a.generators();
    g.insert(g.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.nvars(), std::move(g));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    std::vector<MultiPoly> g;
    for (const auto& p : a.generators())
        for (const auto& q : b.generators()) g.push_back(p * q);
    return Ideal(a.nvars(), std::move(g));
}

Ideal irrelevant_ideal(int nvars) {
    std::vector<MultiPoly> g;
    for (int i = 0; i < nvars; ++i) g.push_back(MultiPoly::variable(nvars, i));
    return Ideal(nvars, std::move(g));
}

Ideal eliminate(const Ideal& ideal, std::span<const bool> vars) {
    const int n = ideal.nvars();
    if (static_cast<int>(vars.size()) != n) throw DomainError("elimination mask has wrong size");
    const GroebnerBasis gb = groebner_basis(ideal.generators(), n, TermOrder::elimination(vars));
    std::vector<MultiPoly> kept;
    for (const auto& p : gb.polys) {
        bool free = true;
        for (int v = 0; v < n && free; ++v)
            if (vars[v] && p.degree_in(v) > 0) free = false;
        if (free) kept.push_back(p);
    }
    return Ideal(n, std::move(kept));
}

Ideal intersection(const Ideal& a, const Ideal& b) {
    const int n = a.nvars();
    if (b.nvars() != n) throw DomainError("intersection ring mismatch");
    if (n + 1 > kMaxVars) throw DomainError("intersection needs one spare variable");
    if (a.is_zero() || b.is_zero()) return Ideal(n);
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    std::vector<int> up(n);
    std::iota(up.begin(), up.end(), 0);
    const MultiPoly t = MultiPoly::variable(n + 1, n);
    const MultiPoly one_minus_t = MultiPoly::constant(n + 1, 1) - t;
    std::vector<MultiPoly> g;
    for (const auto& p : a.generators()) g.push_back(t * rename_variables(p, n + 1, up));
    for (const auto& p : b.generators()) g.push_back(one_minus_t * rename_variables(p, n + 1, up));
    std::vector<bool> mask(n + 1, false);
    mask[n] = true;
    std::array<bool, kMaxVars> arr{};
    std::copy(mask.begin(), mask.end(), arr.begin());
    const GroebnerBasis gb = groebner_basis(g, n + 1, TermOrder::elimination(std::span<const bool>(arr.data(), n + 1)));
    std::vector<int> down(n + 1);
    std::iota(down.begin(), down.end(), 0);
    down[n] = -1;
    std::vector<MultiPoly> kept;
    for (const auto& p : gb.polys)
        if (p.degree_in(n) == 0) kept.push_back(rename_variables(p, n, down));
    return Ideal(n, std::move(kept));
}

namespace {

// Index of the variable when g is c * x_k, else -1.
int as_variable(const MultiPoly& g) {
    if (g.size() != 1 || g.total_degree() != 1) return -1;
    const auto& m = g.terms().front().mono;
    for (int i = 0; i < kMaxVars; ++i)
        if (m.exp[i] == 1) return i;
    return -1;
}

// Bayer's method: a grevlex basis of a homogeneous ideal with x_k last;
// dividing out x_k once (or completely) gives I : x_k (or I : x_k^inf).
Ideal quotient_by_variable(const Ideal& ideal, int k, bool saturate) {
    const int n = ideal.nvars();
    std::vector<int> swap(n);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[k], swap[n - 1]);
    std::vector<MultiPoly> g;
    for (const auto& p : ideal.generators()) g.push_back(rename_variables(p, n, swap));
    const GroebnerBasis gb = groebner_basis(g, n);
    const MultiPoly xl = MultiPoly::variable(n, n - 1);
    std::vector<MultiPoly> out;
    for (MultiPoly p : gb.polys) {
        int low = 1 << 20;
        for (const auto& t : p.terms()) low = std::min<int>(low, t.mono.exp[n - 1]);
        const int times = saturate ? low : std::min(low, 1);
        if (times > 0) p = exact_divide(p, pow(xl, static_cast<unsigned>(times)));
        out.push_back(rename_variables(p, n, swap));
    }
    return Ideal(n, std::move(out));
}

}  // namespace

Ideal ideal_quotient_by_intersection(const Ideal& ideal, const MultiPoly& g) {
    const int n = ideal.nvars();
    if (g.is_zero()) return Ideal(n, {MultiPoly::constant(n, 1)});
    const Ideal meet = intersection(ideal, Ideal(n, {g}));
    std::vector<MultiPoly> q;
    for (const auto& p : meet.basis().polys) q.push_back(exact_divide(p, g));
    return Ideal(n, std::move(q));
}

Ideal ideal_quotient(const Ideal& ideal, const MultiPoly& g) {
    const int n = ideal.nvars();
    if (g.is_zero() || ideal.is_unit()) return Ideal(n, {MultiPoly::constant(n, 1)});
    if (g.is_constant()) return ideal;
    const int k = as_variable(g);
    if (k >= 0 && ideal.is_homogeneous()) return quotient_by_variable(ideal, k, false);
    return ideal_quotient_by_intersection(ideal, g);
}

Ideal ideal_quotient(const Ideal& ideal, const Ideal& j) {
    if (j.is_zero()) return Ideal(ideal.nvars(), {MultiPoly::constant(ideal.nvars(), 1)});
    std::optional<Ideal> acc;
    for (const auto& g : j.generators()) {
        Ideal q = ideal_quotient(ideal, g);
        acc = acc ? intersection(*acc, q) : q;
    }
    return *acc;
}

namespace {

Ideal saturate_by(const Ideal& ideal, const MultiPoly& g) {
    const int k = as_variable(g);
    if (k >= 0 && ideal.is_homogeneous()) return quotient_by_variable(ideal, k, true);
    Ideal cur = ideal;
    while (true) {
        Ideal next = ideal_quotient(cur, g);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

}  // namespace

Ideal saturation(const Ideal& ideal, const Ideal& j) {
    const int n = ideal.nvars();
    if (ideal.is_unit()) return ideal;
    if (j.is_zero()) return Ideal(n, {MultiPoly::constant(n, 1)});
    std::optional<Ideal> acc;
    for (const auto& g : j.generators()) {
        Ideal s = saturate_by(ideal, g);
        acc = acc ? intersection(*acc, s) : s;
    }
    return *acc;
}

Ideal saturate_irrelevant(const Ideal& ideal) { return saturation(ideal, irrelevant_ideal(ideal.nvars())); }

MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
    if (f.is_zero()) return monic(g);
    if (g.is_zero()) return monic(f);
    const int n = f.nvars();
    if (f.is_constant() || g.is_constant()) return MultiPoly::constant(n, 1);
    const Ideal meet = intersection(Ideal(n, {f}), Ideal(n, {g}));
    if (meet.basis().polys.size() != 1) throw InconsistencyError("intersection of principal ideals is not principal");
    return monic(exact_divide(f * g, meet.basis().polys.front()));
}

// ---------------------------------------------------------------------------
// Hilbert series

namespace {

void minimize(std::vector<Monomial>& ms) {
    std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        return grevlex_compare(a, b) < 0;
    });
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Monomial> out;
    for (const auto& m : ms)
        if (std::none_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(m); })) out.push_back(m);
    ms = std::move(out);
}

UniPoly one_minus_t_pow(int d) {
    std::vector<Rational> c(d + 1, Rational(0));
    c[0] = 1;
    c[d] -= 1;
    return UniPoly(std::move(c));
}

// Bigatti-style pivoting on a shared variable:
// N(M) = N(M + <x>) + t * N(M : x).
UniPoly numerator_rec(std::vector<Monomial> ms, int nvars) {
    minimize(ms);
    if (ms.empty()) return UniPoly({Rational(1)});
    std::array<int, kMaxVars> occurrences{};
    for (const auto& m : ms)
        for (int v = 0; v < nvars; ++v)
            if (m.exp[v] > 0) ++occurrences[v];
    int pivot = -1;
    for (int v = 0; v < nvars; ++v)
        if (occurrences[v] > 1 && (pivot < 0 || occurrences[v] > occurrences[pivot])) pivot = v;
    if (pivot < 0) {
        UniPoly prod({Rational(1)});
        for (const auto& m : ms) prod = prod * one_minus_t_pow(m.deg);
        return prod;
    }
    const Monomial x = Monomial::unit(pivot);
    std::vector<Monomial> plus = ms;
    plus.push_back(x);
    std::vector<Monomial> colon;
    for (const auto& m : ms) colon.push_back(m / gcd(m, x));
    return numerator_rec(std::move(plus), nvars) + UniPoly::monomial(1) * numerator_rec(std::move(colon), nvars);
}

void require_homogeneous(const Ideal& ideal) {
    if (!ideal.is_homogeneous()) throw DomainError("Hilbert data requires a homogeneous ideal");
}

}  // namespace

UniPoly hilbert_numerator(std::vector<Monomial> monos, int nvars) { return numerator_rec(std::move(monos), nvars); }

HilbertPoly hilbert_polynomial(const Ideal& ideal) {
    require_homogeneous(ideal);
    const int n = ideal.nvars();
    if (ideal.is_unit()) return HilbertPoly{UniPoly(), 0};
    const UniPoly num = hilbert_numerator(ideal.basis().leading_monomials(), n);
    UniPoly hp;
    for (int k = 0; k <= num.degree(); ++k) {
        if (num.coeff(k).is_zero()) continue;
        // binomial(d - k + n - 1, n - 1) as a polynomial in d
        UniPoly b({Rational(1)});
        for (int i = 1; i <= n - 1; ++i) b = b * UniPoly({Rational(i - k), Rational(1)}) * (Rational(1) / Rational(i));
        hp += b * num.coeff(k);
    }
    return HilbertPoly{hp, std::max(0, num.degree() - n + 1)};
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    Monomial m;
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == nvars - 1) {
            m.exp[var] = static_cast<std::uint16_t>(left);
            m.deg = static_cast<std::uint16_t>(degree);
            out.push_back(m);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m.exp[var] = static_cast<std::uint16_t>(e);
            self(self, var + 1, left - e);
        }
        m.exp[var] = 0;
    };
    if (degree >= 0 && nvars > 0) rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) > 0; });
    return out;
}

long hilbert_function(const Ideal& ideal, int degree) {
    require_homogeneous(ideal);
    if (ideal.is_unit()) return 0;
    const auto lms = ideal.basis().leading_monomials();
    long count = 0;
    for (const auto& m : monomials_of_degree(ideal.nvars(), degree))
        if (std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); })) ++count;
    return count;
}

int proj_dimension(const Ideal& ideal) { return hilbert_polynomial(ideal).degree(); }

std::vector<MultiPoly> graded_piece(const Ideal& ideal, int degree) {
    require_homogeneous(ideal);
    const int n = ideal.nvars();
    const Reducer r(ideal.basis());
    const auto lms = ideal.basis().leading_monomials();
    std::vector<MultiPoly> out;
    for (const auto& m : monomials_of_degree(n, degree)) {
        if (std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); })) continue;
        const MultiPoly mono = MultiPoly::monomial(n, m);
        out.push_back(mono - r.nf(mono));
    }
    return out;
}

std::string HilbertPoly::to_string() const {
    if (poly.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = poly.degree(); i >= 0; --i) {
        Rational c = poly.coeff(i);
        if (c.is_zero()) continue;
        if (c.sign() < 0) os << "-";
        else if (!first) os << "+";
        c = abs(c);
        if (i == 0) os << c;
        else if (!c.is_one()) {
            if (c.is_integer()) os << c;
            else os << "(" << c << ")";
        }
        if (i > 0) os << "n";
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

bool has_solution_over_closure(std::span<const MultiPoly> gens, int nvars) {
    return !groebner_basis(gens, nvars).is_unit();
}

// ---------------------------------------------------------------------------
// Zero-dimensional solving

QuotientAlgebra quotient_algebra(const Ideal& ideal) {
    const int n = ideal.nvars();
    QuotientAlgebra qa;
    if (ideal.is_unit()) return qa;
    const auto lms = ideal.basis().leading_monomials();
    for (int v = 0; v < n; ++v) {
        const bool pure = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) { return m.deg == m.exp[v]; });
        if (!pure) throw DomainError("ideal is not zero-dimensional");
    }
    auto standard = [&](const Monomial& m) {
        return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
    };
    std::vector<Monomial> basis{Monomial{}};
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (int v = 0; v < n; ++v) {
            const Monomial m = basis[k] * Monomial::unit(v);
            if (standard(m) && std::find(basis.begin(), basis.end(), m) == basis.end()) basis.push_back(m);
        }
    std::sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
    const Reducer r(ideal.basis());
    const std::size_t dim = basis.size();
    auto index = [&](const Monomial& m) {
        return static_cast<std::size_t>(std::find(basis.begin(), basis.end(), m) - basis.begin());
    };
    for (int v = 0; v < n; ++v) {
        RatMatrix mv = zeros(dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            const MultiPoly prod = r.nf(MultiPoly::monomial(n, basis[j] * Monomial::unit(v)));
            for (const auto& t : prod.terms()) mv(index(t.mono), j) = t.coeff;
        }
        qa.mult.push_back(std::move(mv));
    }
    qa.basis = std::move(basis);
    return qa;
}

namespace {

Rational trace(const RatMatrix& m) {
    Rational s(0);
    for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
    return s;
}

RatMatrix mat_pow(const RatMatrix& m, int e) {
    RatMatrix acc = identity(m.rows());
    for (int i = 0; i < e; ++i) acc = acc * m;
    return acc;
}

RatMatrix stack(const std::vector<RatMatrix>& ms) {
    std::size_t rows = 0;
    for (const auto& m : ms) rows += m.rows();
    RatMatrix out(rows, ms.front().cols(), Rational(0));
    std::size_t r = 0;
    for (const auto& m : ms)
        for (std::size_t i = 0; i < m.rows(); ++i, ++r)
            for (std::size_t j = 0; j < m.cols(); ++j) out(r, j) = m(i, j);
    return out;
}

// Trace of the restriction of m to the invariant subspace spanned by the
// given basis vectors: R = (B^t B)^{-1} B^t M B.
Rational restricted_trace(const RatMatrix& m, const std::vector<std::vector<Rational>>& basis) {
    RatMatrix b(m.rows(), basis.size(), Rational(0));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) b(i, j) = basis[j][i];
    const RatMatrix bt = b.transpose();
    return trace(inverse(bt * b) * bt * m * b);
}

// Points of the algebra, keeping only those where the variables in
// `vanishing` are zero.
std::vector<SolutionPoint> solve_algebra(const QuotientAlgebra& qa, const std::vector<int>& vanishing) {
    std::vector<SolutionPoint> out;
    const std::size_t dim = qa.dim();
    if (dim == 0) return out;
    const int n = static_cast<int>(qa.mult.size());

    // Distinct points = rank of the trace form.
    std::vector<RatMatrix> mb;
    for (const auto& b : qa.basis) {
        RatMatrix acc = identity(dim);
        for (int v = 0; v < n; ++v) acc = acc * mat_pow(qa.mult[v], b.exp[v]);
        mb.push_back(std::move(acc));
    }
    RatMatrix tf = zeros(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            tf(i, j) = trace(mb[i] * mb[j]);
            tf(j, i) = tf(i, j);
        }
    const std::size_t npoints = rank(tf);

    RatMatrix ml;
    std::vector<std::pair<UniPoly, int>> levels;
    bool found = false;
    for (int k = 0; k < 50 && !found; ++k) {
        ml = zeros(dim, dim);
        Rational w(1);
        for (int v = 0; v < n; ++v) {
            ml = ml + scaled(qa.mult[v], w);
            w *= Rational(k);
        }
        levels = squarefree(charpoly(ml));
        std::size_t distinct = 0;
        for (const auto& [f, m] : levels) distinct += static_cast<std::size_t>(f.degree());
        found = distinct == npoints;
    }
    if (!found) throw InconsistencyError("no separating linear form among 50 candidates");

    std::vector<RatMatrix> nil;
    for (int v : vanishing) nil.push_back(mat_pow(qa.mult[v], static_cast<int>(dim)));

    for (const auto& [factor, m] : levels) {
        UniPoly rest = factor;
        for (const Rational& lambda : rational_roots(factor)) {
            rest = divmod(rest, UniPoly::linear(lambda)).first;
            const auto g = kernel(mat_pow(ml - scaled(identity(dim), lambda), m));
            if (static_cast<int>(g.size()) != m) throw InconsistencyError("generalized eigenspace has wrong dimension");
            std::vector<Rational> coords;
            for (int v = 0; v < n; ++v) coords.push_back(restricted_trace(qa.mult[v], g) / Rational(m));
            const bool keep = std::all_of(vanishing.begin(), vanishing.end(),
                                          [&](int v) { return coords[v].is_zero(); });
            if (keep) out.push_back({coords, 1, m, g});
        }
        if (rest.degree() < 1) continue;
        std::vector<RatMatrix> conds{mat_pow(evaluate(rest, ml), m)};
        conds.insert(conds.end(), nil.begin(), nil.end());
        auto space = kernel(stack(conds));
        const std::size_t sub = space.size();
        if (sub % static_cast<std::size_t>(m) != 0) throw InconsistencyError("orbit subspace dimension mismatch");
        if (sub > 0) out.push_back({std::nullopt, static_cast<int>(sub / m), m, std::move(space)});
    }
    return out;
}

}  // namespace

std::vector<SolutionPoint> zero_dim_solve(const Ideal& ideal) { return solve_algebra(quotient_algebra(ideal), {}); }

MultiPoly dehomogenize(const MultiPoly& p, int var) {
    const int n = p.nvars();
    if (var < 0 || var >= n || n < 2) throw DomainError("invalid chart variable");
    std::vector<MultiPoly> images;
    for (int i = 0; i < n; ++i) {
        if (i == var) images.push_back(MultiPoly::constant(n - 1, 1));
        else images.push_back(MultiPoly::variable(n - 1, i < var ? i : i - 1));
    }
    return substitute(p, images);
}

std::vector<ProjectivePoint> projective_solve(const Ideal& ideal) {
    if (!ideal.is_homogeneous()) throw DomainError("projective solving needs a homogeneous ideal");
    const int n = ideal.nvars();
    std::vector<ProjectivePoint> out;
    for (int c = 0; c < n; ++c) {
        std::vector<MultiPoly> g;
        for (const auto& p : ideal.generators()) g.push_back(dehomogenize(p, c));
        const Ideal chart(n - 1, std::move(g));
        if (chart.is_unit()) continue;
        std::vector<int> vanish(c);
        std::iota(vanish.begin(), vanish.end(), 0);
        auto qa = std::make_shared<const QuotientAlgebra>(quotient_algebra(chart));
        for (auto& s : solve_algebra(*qa, vanish)) {
            if (s.coords) {
                std::vector<Rational> full;
                for (int i = 0; i < n; ++i) {
                    if (i == c) full.emplace_back(1);
                    else full.push_back((*s.coords)[i < c ? i : i - 1]);
                }
                s.coords = std::move(full);
            }
            out.push_back({std::move(s), c, qa});
        }
    }
    return out;
}

RatMatrix multiplication_matrix(const QuotientAlgebra& qa, const MultiPoly& p) {
    const std::size_t dim = qa.dim();
    if (p.nvars() != static_cast<int>(qa.mult.size())) throw DomainError("polynomial ring does not match the algebra");
    RatMatrix acc = zeros(dim, dim);
    for (const auto& t : p.terms()) {
        RatMatrix m = identity(dim);
        for (int v = 0; v < p.nvars(); ++v) m = m * mat_pow(qa.mult[v], t.mono.exp[v]);
        acc = acc + scaled(m, t.coeff);
    }
    return acc;
}

bool vanishes_at(const ProjectivePoint& point, const MultiPoly& p) {
    if (!point.algebra) throw DomainError("projective point carries no algebra");
    const auto& sub = point.solution.subspace;
    if (sub.empty()) throw DomainError("projective point carries no local subspace");
    const RatMatrix mp = multiplication_matrix(*point.algebra, dehomogenize(p, point.chart));
    RatMatrix b(mp.rows(), sub.size(), Rational(0));
    for (std::size_t j = 0; j < sub.size(); ++j)
        for (std::size_t i = 0; i < mp.rows(); ++i) b(i, j) = sub[j][i];
    // The subspace is invariant, so nilpotency there is (M_p)^k B = 0.
    for (std::size_t k = 0; k < sub.size(); ++k) b = mp * b;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!b(i, j).is_zero()) return false;
    return true;
}

}  // namespace gtc
