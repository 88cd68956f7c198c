/*
   Copyright 2026 The lagengel Authors

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

#ifndef LAGENGEL_POLY_HPP
#define LAGENGEL_POLY_HPP

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace lagengel {

/// Power product of named symbols. Factors are kept sorted by symbol name,
/// which is the global symbol order, and exponents are positive.
class Monomial {
public:
    using Factor = std::pair<std::string, unsigned>;

    Monomial() = default;
    explicit Monomial(const std::string& symbol, unsigned exponent = 1) {
        if (exponent > 0) factors_.emplace_back(symbol, exponent);
    }

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }

    unsigned degree() const noexcept {
        unsigned d = 0;
        for (const auto& [s, e] : factors_) d += e;
        return d;
    }

    unsigned exponent(const std::string& symbol) const noexcept {
        for (const auto& [s, e] : factors_)
            if (s == symbol) return e;
        return 0;
    }

    /// Copy with the exponent of `symbol` replaced.
    Monomial with_exponent(const std::string& symbol, unsigned exponent) const {
        Monomial m;
        bool placed = false;
        for (const auto& f : factors_) {
            if (!placed && symbol < f.first) {
                if (exponent > 0) m.factors_.emplace_back(symbol, exponent);
                placed = true;
            }
            if (f.first == symbol) {
                if (exponent > 0) m.factors_.emplace_back(symbol, exponent);
                placed = true;
            } else {
                m.factors_.push_back(f);
            }
        }
        if (!placed && exponent > 0) m.factors_.emplace_back(symbol, exponent);
        return m;
    }

    friend Monomial operator*(const Monomial& x, const Monomial& y) {
        Monomial m;
        auto i = x.factors_.begin();
        auto j = y.factors_.begin();
        while (i != x.factors_.end() || j != y.factors_.end()) {
            if (j == y.factors_.end() || (i != x.factors_.end() && i->first < j->first)) {
                m.factors_.push_back(*i++);
            } else if (i == x.factors_.end() || j->first < i->first) {
                m.factors_.push_back(*j++);
            } else {
                m.factors_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string str() const {
        std::string out;
        for (const auto& [s, e] : factors_) {
            if (!out.empty()) out += "*";
            out += s;
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }

private:
    std::vector<Factor> factors_;
};

/// Graded lexicographic order: total degree first, then the exponent of the
/// first symbol (in name order) where the two monomials differ.
struct GrlexLess {
    bool operator()(const Monomial& x, const Monomial& y) const {
        unsigned dx = x.degree(), dy = y.degree();
        if (dx != dy) return dx < dy;
        const auto& fx = x.factors();
        const auto& fy = y.factors();
        auto i = fx.begin();
        auto j = fy.begin();
        while (i != fx.end() && j != fy.end()) {
            if (i->first != j->first) return i->first > j->first;
            if (i->second != j->second) return i->second < j->second;
            ++i;
            ++j;
        }
        return i == fx.end() && j != fy.end();
    }
};

/// Multivariate polynomial with exact rational coefficients over named
/// symbols. Zero coefficients are never stored.
class Poly {
public:
    using Terms = std::map<Monomial, Rational, GrlexLess>;

    Poly() = default;
    Poly(int c) : Poly(Rational(c)) {}
    Poly(const Rational& c) {
        if (c != 0) terms_.emplace(Monomial{}, c);
    }

    static Poly symbol(const std::string& name) {
        Poly p;
        p.terms_.emplace(Monomial(name), Rational(1));
        return p;
    }
    static Poly term(const Rational& c, const Monomial& m) {
        Poly p;
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    /// Value of a constant polynomial; throws for non-constant input.
    Rational constant_value() const {
        if (!is_constant()) throw Error("polynomial " + str() + " is not constant");
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }
    /// Coefficient of the monomial 1.
    Rational constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    unsigned total_degree() const noexcept {
        return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
    }

    /// Leading term under grlex.
    std::pair<Monomial, Rational> leading_term() const {
        if (terms_.empty()) return {Monomial{}, Rational(0)};
        return *terms_.rbegin();
    }

    std::set<std::string> symbols() const {
        std::set<std::string> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [s, e] : m.factors()) out.insert(s);
        return out;
    }

    Poly& operator+=(const Poly& q) {
        for (const auto& [m, c] : q.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& q) {
        for (const auto& [m, c] : q.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Poly& q) { return *this = *this * q; }

    friend Poly operator+(Poly p, const Poly& q) { return p += q; }
    friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
    friend Poly operator-(const Poly& p) {
        Poly r;
        for (const auto& [m, c] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
        return r;
    }
    friend Poly operator*(const Poly& p, const Poly& q) {
        Poly r;
        for (const auto& [mp, cp] : p.terms_)
            for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
        return r;
    }
    friend bool operator==(const Poly& p, const Poly& q) { return p.terms_ == q.terms_; }

    Poly pow(unsigned n) const {
        Poly r(1), base = *this;
        while (n) {
            if (n & 1u) r *= base;
            n >>= 1u;
            if (n) base *= base;
        }
        return r;
    }

    /// Exact value at a full assignment. Throws MissingSymbolError when a
    /// symbol of the polynomial is unassigned.
    Rational eval(const std::map<std::string, Rational>& assignment) const {
        Rational total = 0;
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            for (const auto& [s, e] : m.factors()) {
                auto it = assignment.find(s);
                if (it == assignment.end()) throw MissingSymbolError(s);
                for (unsigned k = 0; k < e; ++k) v *= it->second;
            }
            total += v;
        }
        return total;
    }

    /// Substitutes polynomials for some symbols, leaving the others alone.
    Poly substitute(const std::map<std::string, Poly>& values) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            Poly t(c);
            Monomial rest;
            for (const auto& [s, e] : m.factors()) {
                auto it = values.find(s);
                if (it == values.end()) {
                    rest = rest * Monomial(s, e);
                } else {
                    t *= it->second.pow(e);
                }
            }
            r += t * term(Rational(1), rest);
        }
        return r;
    }

    Poly substitute(const std::map<std::string, Rational>& values) const {
        std::map<std::string, Poly> as_poly;
        for (const auto& [s, v] : values) as_poly.emplace(s, Poly(v));
        return substitute(as_poly);
    }

    /// Formal partial derivative with respect to a symbol.
    Poly partial(const std::string& symbol) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            unsigned e = m.exponent(symbol);
            if (e == 0) continue;
            r.add_term(m.with_exponent(symbol, e - 1), c * e);
        }
        return r;
    }

    Poly scaled(const Rational& k) const {
        Poly r;
        if (k == 0) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * k);
        return r;
    }

    /// Human and parser readable text, highest grlex term first,
    /// e.g. "a^2*b - 1/4*b".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (m.is_one()) {
                out += to_string(mag);
            } else {
                if (mag != 1) out += to_string(mag) + "*";
                out += m.str();
            }
            first = false;
        }
        return out;
    }

    /// True when the polynomial is a single term, so the text needs no
    /// parentheses when used as a factor.
    bool is_monomial() const noexcept { return terms_.size() <= 1; }

private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Terms terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }
inline std::string to_string(const Poly& p) { return p.str(); }
inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

/// Exact evaluation of a parameter polynomial at an assignment.
inline Rational poly_eval(const Poly& p, const std::map<std::string, Rational>& assignment) {
    return p.eval(assignment);
}

}  // namespace lagengel

#endif  // LAGENGEL_POLY_HPP
