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

#include "gtc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "gtc/error.hpp"

namespace gtc {

Monomial::Monomial(std::initializer_list<int> exps) {
    if (exps.size() > static_cast<std::size_t>(kMaxVars)) throw DomainError("too many exponents");
    int i = 0;
    for (int e : exps) {
        if (e < 0) throw DomainError("negative exponent");
        exp[i++] = static_cast<std::uint16_t>(e);
        deg = static_cast<std::uint16_t>(deg + e);
    }
}

Monomial Monomial::unit(int var) {
    Monomial m;
    m.exp[var] = 1;
    m.deg = 1;
    return m;
}

bool Monomial::divides(const Monomial& other) const {
    if (deg > other.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
        if (exp[i] > other.exp[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
    m.deg = static_cast<std::uint16_t>(a.deg + b.deg);
    return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
    m.deg = static_cast<std::uint16_t>(a.deg - b.deg);
    return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
        m.exp[i] = std::max(a.exp[i], b.exp[i]);
        m.deg = static_cast<std::uint16_t>(m.deg + m.exp[i]);
    }
    return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
        m.exp[i] = std::min(a.exp[i], b.exp[i]);
        m.deg = static_cast<std::uint16_t>(m.deg + m.exp[i]);
    }
    return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.exp[i] != 0 && b.exp[i] != 0) return false;
    return true;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (int i = kMaxVars - 1; i >= 0; --i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    }
    return 0;
}

namespace {

bool term_greater(const MultiPoly::Term& a, const MultiPoly::Term& b) {
    return grevlex_compare(a.mono, b.mono) > 0;
}

void check_nvars(int n) {
    if (n < 1 || n > kMaxVars) throw DomainError("variable count out of range");
}

}  // namespace

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw DomainError("variable index out of range");
    MultiPoly p(nvars);
    p.terms_.push_back({Monomial::unit(index), Rational(1)});
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, const Monomial& m, const Rational& c) {
    MultiPoly p(nvars);
    for (int i = nvars; i < kMaxVars; ++i)
        if (m.exp[i] != 0) throw DomainError("monomial outside the ring");
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<Term> terms) {
    MultiPoly p(nvars);
    for (const auto& t : terms)
        for (int i = nvars; i < kMaxVars; ++i)
            if (t.mono.exp[i] != 0) throw DomainError("monomial outside the ring");
    std::sort(terms.begin(), terms.end(), term_greater);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : terms_.front().mono.deg; }

bool MultiPoly::is_homogeneous() const {
    for (const auto& t : terms_)
        if (t.mono.deg != terms_.front().mono.deg) return false;
    return true;
}

const MultiPoly::Term& MultiPoly::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return terms_.front();
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Rational(0);
}

int MultiPoly::degree_in(int var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.exp[var]));
    return d;
}

void MultiPoly::check_ring(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("polynomial ring mismatch");
}

namespace {

std::vector<MultiPoly::Term> merge(const std::vector<MultiPoly::Term>& a, const std::vector<MultiPoly::Term>& b,
                                   bool subtract) {
    std::vector<MultiPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        const int c = i == a.size() ? -1 : (j == b.size() ? 1 : grevlex_compare(a[i].mono, b[j].mono));
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({b[j].mono, subtract ? -b[j].coeff : b[j].coeff});
            ++j;
        } else {
            Rational s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
            if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_ring(o);
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_ring(o);
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.nvars_);
    std::vector<MultiPoly::Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return MultiPoly::from_terms(a.nvars_, std::move(prod));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

MultiPoly operator-(MultiPoly a) {
    for (auto& t : a.terms_) t.coeff = -t.coeff;
    return a;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

MultiPoly pow(const MultiPoly& p, unsigned exponent) {
    MultiPoly out = MultiPoly::constant(p.nvars(), 1);
    MultiPoly b = p;
    while (exponent != 0) {
        if (exponent & 1U) out *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return out;
}

MultiPoly derivative(const MultiPoly& p, int var) {
    if (var < 0 || var >= p.nvars()) throw DomainError("derivative variable out of range");
    std::vector<MultiPoly::Term> out;
    for (const auto& t : p.terms()) {
        const int e = t.mono.exp[var];
        if (e == 0) continue;
        Monomial m = t.mono;
        m.exp[var] = static_cast<std::uint16_t>(e - 1);
        m.deg = static_cast<std::uint16_t>(m.deg - 1);
        out.push_back({m, t.coeff * Rational(e)});
    }
    return MultiPoly::from_terms(p.nvars(), std::move(out));
}

MultiPoly homogeneous_part(const MultiPoly& p, int degree) {
    std::vector<MultiPoly::Term> out;
    for (const auto& t : p.terms())
        if (t.mono.deg == degree) out.push_back(t);
    return MultiPoly::from_terms(p.nvars(), std::move(out));
}

Rational evaluate(const MultiPoly& p, std::span<const Rational> point) {
    if (static_cast<int>(point.size()) != p.nvars()) throw DomainError("evaluation point has wrong dimension");
    Rational sum(0);
    for (const auto& t : p.terms()) {
        Rational v = t.coeff;
        for (int i = 0; i < p.nvars(); ++i)
            if (t.mono.exp[i] != 0) v *= pow(point[i], t.mono.exp[i]);
        sum += v;
    }
    return sum;
}

MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images) {
    if (static_cast<int>(images.size()) != p.nvars()) throw DomainError("substitution needs one image per variable");
    const int target = images.empty() ? 1 : images[0].nvars();
    for (const auto& im : images)
        if (im.nvars() != target) throw DomainError("substitution images in different rings");
    std::vector<std::vector<MultiPoly>> powers(images.size());
    MultiPoly out(target);
    for (const auto& t : p.terms()) {
        MultiPoly v = MultiPoly::constant(target, t.coeff);
        for (int i = 0; i < p.nvars(); ++i) {
            const int e = t.mono.exp[i];
            if (e == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(MultiPoly::constant(target, 1));
            while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
            v *= pw[e];
        }
        out += v;
    }
    return out;
}

MultiPoly monic(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading_term().coeff);
}

MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& d) {
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    if (p.nvars() != d.nvars()) throw DomainError("polynomial ring mismatch");
    const auto& lt = d.leading_term();
    MultiPoly rest = p;
    std::vector<MultiPoly::Term> quotient;
    while (!rest.is_zero()) {
        const auto& r = rest.leading_term();
        if (!lt.mono.divides(r.mono)) throw DomainError("polynomial division is not exact");
        MultiPoly::Term q{r.mono / lt.mono, r.coeff / lt.coeff};
        rest -= MultiPoly::monomial(p.nvars(), q.mono, q.coeff) * d;
        quotient.push_back(std::move(q));
    }
    return MultiPoly::from_terms(p.nvars(), std::move(quotient));
}

MultiPoly rename_variables(const MultiPoly& p, int nvars, std::span<const int> target) {
    if (static_cast<int>(target.size()) != p.nvars()) throw DomainError("rename map has wrong size");
    std::vector<MultiPoly::Term> out;
    for (const auto& t : p.terms()) {
        Monomial m;
        for (int i = 0; i < p.nvars(); ++i) {
            if (t.mono.exp[i] == 0) continue;
            if (target[i] < 0 || target[i] >= nvars) throw DomainError("rename target out of range");
            m.exp[target[i]] = static_cast<std::uint16_t>(m.exp[target[i]] + t.mono.exp[i]);
        }
        m.deg = t.mono.deg;
        out.push_back({m, t.coeff});
    }
    return MultiPoly::from_terms(nvars, std::move(out));
}

MultiPoly linear_form(std::span<const Rational> coeffs) {
    const int n = static_cast<int>(coeffs.size());
    std::vector<MultiPoly::Term> terms;
    for (int i = 0; i < n; ++i) terms.push_back({Monomial::unit(i), coeffs[i]});
    return MultiPoly::from_terms(n, std::move(terms));
}

std::vector<Rational> linear_coefficients(const MultiPoly& p) {
    std::vector<Rational> c(p.nvars(), Rational(0));
    for (const auto& t : p.terms()) {
        if (t.mono.deg != 1) throw DomainError("expected a linear form");
        for (int i = 0; i < p.nvars(); ++i)
            if (t.mono.exp[i] == 1) c[i] = t.coeff;
    }
    return c;
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::span<const bool> outer) {
    if (static_cast<int>(outer.size()) != p.nvars()) throw DomainError("variable mask has wrong size");
    std::map<std::array<std::uint16_t, kMaxVars>, std::vector<MultiPoly::Term>> groups;
    for (const auto& t : p.terms()) {
        std::array<std::uint16_t, kMaxVars> key{};
        Monomial inner = t.mono;
        for (int i = 0; i < p.nvars(); ++i) {
            if (!outer[i]) continue;
            key[i] = t.mono.exp[i];
            inner.exp[i] = 0;
            inner.deg = static_cast<std::uint16_t>(inner.deg - t.mono.exp[i]);
        }
        groups[key].push_back({inner, t.coeff});
    }
    std::vector<MultiPoly> out;
    for (auto& [key, terms] : groups) out.push_back(MultiPoly::from_terms(p.nvars(), std::move(terms)));
    return out;
}

std::string to_string(const MultiPoly& p, std::string_view prefix) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coeff;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        c = abs(c);
        bool need_star = false;
        if (!c.is_one() || t.mono.is_one()) {
            os << c;
            need_star = true;
        }
        for (int i = 0; i < p.nvars(); ++i) {
            const int e = t.mono.exp[i];
            if (e == 0) continue;
            if (need_star) os << "*";
            os << prefix << i;
            if (e > 1) os << "^" << e;
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

namespace {

class PolyParser {
   public:
    PolyParser(std::string_view text, int nvars) : s_(text), n_(nvars) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly p(n_);
        skip();
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        p = term();
        if (negate) p = -p;
        while (true) {
            if (accept('+')) p += term();
            else if (accept('-')) p -= term();
            else break;
        }
        return p;
    }

    MultiPoly term() {
        MultiPoly p = factor();
        while (true) {
            if (accept('*')) {
                p *= factor();
            } else if (accept('/')) {
                MultiPoly d = factor();
                if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
                p *= Rational(1) / d.leading_term().coeff;
            } else {
                break;
            }
        }
        return p;
    }

    MultiPoly factor() {
        MultiPoly base = unary();
        if (accept('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
            if (e > 64) fail("exponent too large");
            base = pow(base, static_cast<unsigned>(e));
        }
        return base;
    }

    MultiPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return primary();
    }

    MultiPoly primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return MultiPoly::constant(n_, Rational::parse(s_.substr(start, pos_ - start)));
        }
        if (c == 'x' || c == 'z' || c == 't') {
            ++pos_;
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("variable needs an index");
            const int idx = std::stoi(std::string(s_.substr(start, pos_ - start)));
            if (idx >= n_) fail("variable index " + std::to_string(idx) + " outside the ring");
            return MultiPoly::variable(n_, idx);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, int nvars) {
    check_nvars(nvars);
    return PolyParser(text, nvars).parse();
}

}  // namespace gtc
