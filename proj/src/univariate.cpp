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

#include "gtc/univariate.hpp"

#include <algorithm>
#include <sstream>

#include "gtc/error.hpp"

namespace gtc {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(int degree, const Rational& c) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear(const Rational& root) { return UniPoly({-root, Rational(1)}); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
}

Rational UniPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational UniPoly::operator()(const Rational& t) const {
    Rational v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(out));
}

UniPoly operator*(UniPoly a, const Rational& c) {
    for (auto& x : a.c_) x *= c;
    a.trim();
    return a;
}

std::string UniPoly::to_string(std::string_view var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = c_[i];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        c = abs(c);
        if (!c.is_one() || i == 0) os << c << (i > 0 ? "*" : "");
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DomainError("univariate division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Rational> quo(a.degree() - db + 1, Rational(0));
    const Rational lb = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        if (rem[i].is_zero()) continue;
        const Rational q = rem[i] / lb;
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly derivative(const UniPoly& p) {
    if (p.degree() < 1) return UniPoly();
    std::vector<Rational> d;
    for (int i = 1; i <= p.degree(); ++i) d.push_back(p.coeff(i) * Rational(i));
    return UniPoly(std::move(d));
}

UniPoly monic(const UniPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading());
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
    UniPoly x = a;
    UniPoly y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second;
        x = std::move(y);
        y = monic(r);
    }
    return monic(x);
}

std::vector<std::pair<UniPoly, int>> squarefree(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() < 1) return out;
    const UniPoly f = monic(p);
    const UniPoly fp = derivative(f);
    UniPoly a = gcd(f, fp);
    UniPoly b = divmod(f, a).first;
    UniPoly c = divmod(fp, a).first;
    UniPoly d = c - derivative(b);
    int i = 1;
    while (b.degree() >= 1) {
        UniPoly g = gcd(b, d);
        if (g.degree() >= 1) out.emplace_back(g, i);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - derivative(b);
        ++i;
    }
    return out;
}

namespace {

// Trial division with a fixed bound; a remaining cofactor beyond bound^2
// cannot be certified prime, so callers get an error instead of a silently
// incomplete divisor list.
std::vector<Integer> divisors(Integer n) {
    if (n < 0) n = -n;
    if (n == 0) throw DomainError("divisors of zero");
    std::vector<std::pair<Integer, int>> factors;
    const Integer bound = 2000000;
    for (Integer d = 2; d * d <= n && d <= bound; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) factors.emplace_back(d, e);
    }
    if (n > 1) {
        if (n > bound * bound) throw InconsistencyError("rational root search: coefficient too large to factor");
        factors.emplace_back(n, 1);
    }
    std::vector<Integer> divs{1};
    for (const auto& [prime, e] : factors) {
        const std::size_t sz = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= prime;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
    std::vector<Rational> roots;
    if (p.degree() < 1) return roots;
    // Strip the factor t^k.
    int low = 0;
    while (p.coeff(low).is_zero()) ++low;
    if (low > 0) roots.emplace_back(0);
    std::vector<Rational> rest(p.coeffs().begin() + low, p.coeffs().end());
    const UniPoly q(rest);
    if (q.degree() < 1) return roots;
    Integer den = 1;
    for (const auto& c : q.coeffs()) den = lcm(den, c.denominator());
    std::vector<Integer> ints;
    for (const auto& c : q.coeffs()) ints.push_back((c * Rational(den)).numerator());
    for (const Integer& pn : divisors(ints.front())) {
        for (const Integer& qd : divisors(ints.back())) {
            for (int s : {1, -1}) {
                const Rational cand(Integer(pn * s), qd);
                if (q(cand).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

UniPoly to_univariate(const MultiPoly& p) {
    if (p.nvars() != 1) throw DomainError("expected a single-variable polynomial");
    std::vector<Rational> c(std::max(0, p.total_degree() + 1), Rational(0));
    for (const auto& t : p.terms()) c[t.mono.exp[0]] = t.coeff;
    return UniPoly(std::move(c));
}

MultiPoly to_multipoly(const UniPoly& p) {
    std::vector<MultiPoly::Term> terms;
    for (int i = 0; i <= p.degree(); ++i) terms.push_back({Monomial{i}, p.coeff(i)});
    return MultiPoly::from_terms(1, std::move(terms));
}

MultiPoly uni_gcd(const MultiPoly& p, const MultiPoly& q) {
    return to_multipoly(gcd(to_univariate(p), to_univariate(q)));
}

std::vector<std::pair<MultiPoly, int>> uni_squarefree(const MultiPoly& p) {
    std::vector<std::pair<MultiPoly, int>> out;
    for (auto& [f, m] : squarefree(to_univariate(p))) out.emplace_back(to_multipoly(f), m);
    return out;
}

}  // namespace gtc
