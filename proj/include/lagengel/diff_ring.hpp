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

#ifndef LAGENGEL_DIFF_RING_HPP
#define LAGENGEL_DIFF_RING_HPP

#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace lagengel {

/// Polynomial differential ring over a set of coordinates.
///
/// Besides the coordinates (with d x_i / d x_j = delta_ij) the ring knows
/// constants (derivative zero) and extension generators whose partial
/// derivatives are declared as polynomials of the ring, e.g. E with
/// dE/dy = beta*E standing for exp(beta*y). Two kinds of relations are
/// applied as rewrites by normalize():
///   - trig pairs (C, S):    S^2 -> 1 - C^2
///   - inverse pairs (P, Q): P*Q -> 1
/// Normal forms are unique, so zero testing is exact.
class DiffRing {
public:
    DiffRing& add_coordinate(const std::string& name) {
        declare(name);
        coordinates_.push_back(name);
        return *this;
    }
    DiffRing& add_constant(const std::string& name) {
        declare(name);
        constants_.insert(name);
        return *this;
    }
    /// Declares a generator; its derivatives are given afterwards with
    /// set_derivative. Unlisted derivatives are zero.
    DiffRing& add_generator(const std::string& name) {
        declare(name);
        generators_[name];
        return *this;
    }
    DiffRing& set_derivative(const std::string& generator, const std::string& coordinate, Poly value) {
        if (!generators_.contains(generator)) throw UnknownSymbolError(generator);
        if (!is_coordinate(coordinate)) throw UnknownSymbolError(coordinate);
        generators_[generator][coordinate] = std::move(value);
        return *this;
    }
    DiffRing& add_trig_pair(const std::string& cosine, const std::string& sine) {
        require_declared(cosine);
        require_declared(sine);
        trig_pairs_.emplace_back(cosine, sine);
        return *this;
    }
    DiffRing& add_inverse_pair(const std::string& p, const std::string& q) {
        require_declared(p);
        require_declared(q);
        inverse_pairs_.emplace_back(p, q);
        return *this;
    }

    /// Checks that every derivative in the table only uses declared symbols.
    void validate() const {
        for (const auto& [g, table] : generators_)
            for (const auto& [x, value] : table)
                for (const auto& s : value.symbols()) require_declared(s);
    }

    const std::vector<std::string>& coordinates() const noexcept { return coordinates_; }
    const std::set<std::string>& constants() const noexcept { return constants_; }
    std::vector<std::string> generators() const {
        std::vector<std::string> out;
        for (const auto& [g, t] : generators_) out.push_back(g);
        return out;
    }
    const std::vector<std::pair<std::string, std::string>>& trig_pairs() const noexcept { return trig_pairs_; }
    const std::vector<std::pair<std::string, std::string>>& inverse_pairs() const noexcept {
        return inverse_pairs_;
    }
    const std::map<std::string, Poly>& derivative_table(const std::string& generator) const {
        auto it = generators_.find(generator);
        if (it == generators_.end()) throw UnknownSymbolError(generator);
        return it->second;
    }

    bool is_coordinate(const std::string& s) const {
        for (const auto& c : coordinates_)
            if (c == s) return true;
        return false;
    }
    bool is_declared(const std::string& s) const { return declared_.contains(s); }

    Poly normalize(const Poly& p) const {
        Poly out;
        std::vector<std::pair<Monomial, Rational>> work(p.terms().begin(), p.terms().end());
        while (!work.empty()) {
            auto [m, c] = std::move(work.back());
            work.pop_back();
            for (const auto& [a, b] : inverse_pairs_) {
                unsigned k = std::min(m.exponent(a), m.exponent(b));
                if (k) m = m.with_exponent(a, m.exponent(a) - k).with_exponent(b, m.exponent(b) - k);
            }
            bool rewritten = false;
            for (const auto& [cs, sn] : trig_pairs_) {
                unsigned e = m.exponent(sn);
                if (e >= 2) {
                    Monomial base = m.with_exponent(sn, e - 2);
                    work.emplace_back(base, c);
                    work.emplace_back(base * Monomial(cs, 2), -c);
                    rewritten = true;
                    break;
                }
            }
            if (!rewritten) out += Poly::term(c, m);
        }
        return out;
    }

    /// Formal partial derivative by the Leibniz rule, in normal form.
    Poly derive(const Poly& p, const std::string& coordinate) const {
        if (!is_coordinate(coordinate)) throw UnknownSymbolError(coordinate);
        Poly out;
        for (const auto& [m, c] : p.terms()) {
            for (const auto& [s, e] : m.factors()) {
                Poly ds = symbol_derivative(s, coordinate);
                if (ds.is_zero()) continue;
                Monomial rest = m.with_exponent(s, e - 1);
                out += Poly::term(c * e, rest) * ds;
            }
        }
        return normalize(out);
    }

    /// A rational point satisfying every declared relation, drawn from a
    /// seeded generator. Values avoid 0 and +-1.
    std::map<std::string, Rational> witness(unsigned seed = 20260) const {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> num(2, 29), den(1, 7);
        auto pick = [&] {
            Rational r(num(rng), den(rng));
            if (rng() % 2) r = -r;
            if (r == 1 || r == -1) r = Rational(3, 2);
            return r;
        };
        std::map<std::string, Rational> w;
        for (const auto& s : declared_) w[s] = pick();
        for (const auto& [a, b] : inverse_pairs_) w[b] = 1 / w[a];
        for (const auto& [cs, sn] : trig_pairs_) {
            Rational t = pick();
            w[cs] = (1 - t * t) / (1 + t * t);
            w[sn] = 2 * t / (1 + t * t);
        }
        return w;
    }

    friend bool operator==(const DiffRing&, const DiffRing&) = default;

private:
    Poly symbol_derivative(const std::string& s, const std::string& coordinate) const {
        if (is_coordinate(s)) return Poly(s == coordinate ? 1 : 0);
        if (constants_.contains(s)) return Poly();
        auto g = generators_.find(s);
        if (g == generators_.end()) throw UnknownSymbolError(s);
        auto it = g->second.find(coordinate);
        return it == g->second.end() ? Poly() : it->second;
    }
    void declare(const std::string& name) {
        if (!declared_.insert(name).second) throw Error("symbol '" + name + "' declared twice");
    }
    void require_declared(const std::string& s) const {
        if (!declared_.contains(s)) throw UnknownSymbolError(s);
    }

    std::vector<std::string> coordinates_;
    std::set<std::string> constants_;
    std::map<std::string, std::map<std::string, Poly>> generators_;
    std::vector<std::pair<std::string, std::string>> trig_pairs_;
    std::vector<std::pair<std::string, std::string>> inverse_pairs_;
    std::set<std::string> declared_;
};

using DiffRingPtr = std::shared_ptr<const DiffRing>;

/// Element of a DiffRing, always in normal form. A default-constructed or
/// rational DiffScalar carries no ring and combines with any ring.
class DiffScalar {
public:
    DiffScalar() = default;
    DiffScalar(int c) : value_(c) {}
    DiffScalar(const Rational& c) : value_(c) {}
    DiffScalar(DiffRingPtr ring, const Poly& value) : ring_(std::move(ring)) {
        if (ring_) {
            for (const auto& s : value.symbols())
                if (!ring_->is_declared(s)) throw UnknownSymbolError(s);
            value_ = ring_->normalize(value);
        } else {
            if (!value.is_constant()) throw ContextMismatchError("symbolic DiffScalar needs a ring");
            value_ = value;
        }
    }

    const DiffRingPtr& ring() const noexcept { return ring_; }
    const Poly& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_.is_zero(); }

    friend DiffScalar operator+(const DiffScalar& p, const DiffScalar& q) {
        return DiffScalar(joined(p, q), p.value_ + q.value_, raw_tag{});
    }
    friend DiffScalar operator-(const DiffScalar& p, const DiffScalar& q) {
        return DiffScalar(joined(p, q), p.value_ - q.value_, raw_tag{});
    }
    friend DiffScalar operator-(const DiffScalar& p) { return DiffScalar(p.ring_, -p.value_, raw_tag{}); }
    friend DiffScalar operator*(const DiffScalar& p, const DiffScalar& q) {
        auto ring = joined(p, q);
        Poly prod = p.value_ * q.value_;
        if (ring) prod = ring->normalize(prod);
        return DiffScalar(ring, std::move(prod), raw_tag{});
    }
    DiffScalar& operator+=(const DiffScalar& q) { return *this = *this + q; }
    DiffScalar& operator-=(const DiffScalar& q) { return *this = *this - q; }
    DiffScalar& operator*=(const DiffScalar& q) { return *this = *this * q; }

    friend bool operator==(const DiffScalar& p, const DiffScalar& q) {
        joined(p, q);
        return p.value_ == q.value_;
    }

    /// Partial derivative with respect to a coordinate of the ring.
    DiffScalar derive(const std::string& coordinate) const {
        if (!ring_) {
            if (value_.is_constant()) return DiffScalar();
            throw ContextMismatchError("derivative of a DiffScalar without ring");
        }
        return DiffScalar(ring_, ring_->derive(value_, coordinate), raw_tag{});
    }

    std::string str() const { return value_.str(); }

private:
    struct raw_tag {};
    DiffScalar(DiffRingPtr ring, Poly value, raw_tag) : ring_(std::move(ring)), value_(std::move(value)) {}

    static DiffRingPtr joined(const DiffScalar& p, const DiffScalar& q) {
        if (!p.ring_) return q.ring_;
        if (!q.ring_ || p.ring_ == q.ring_ || *p.ring_ == *q.ring_) return p.ring_;
        throw ContextMismatchError("scalars from different differential rings");
    }

    DiffRingPtr ring_;
    Poly value_;
};

inline bool is_zero(const DiffScalar& s) { return s.is_zero(); }
inline std::string to_string(const DiffScalar& s) { return s.str(); }

/// Partial derivative of a chart scalar.
inline DiffScalar diff_derive(const DiffScalar& s, const std::string& coordinate) {
    return s.derive(coordinate);
}

}  // namespace lagengel

#endif  // LAGENGEL_DIFF_RING_HPP
