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

#ifndef LAGENGEL_QUAD_EXT_HPP
#define LAGENGEL_QUAD_EXT_HPP

#include <ostream>
#include <string>
#include <utility>

#include "errors.hpp"
#include "rational.hpp"

namespace lagengel {

/// Splits n > 0 as m^2 * d with d squarefree.
inline std::pair<Integer, Integer> squarefree_split(Integer n) {
    if (n <= 0) throw Error("squarefree_split expects a positive integer");
    Integer square = 1, free = 1;
    for (Integer p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (unsigned k = 0; k < e / 2; ++k) square *= p;
        if (e % 2) free *= p;
    }
    free *= n;
    return {square, free};
}

/// Element x + y*sqrt(D) of the real quadratic field Q(sqrt(D)), D squarefree
/// and greater than one.
class QuadExt {
public:
    /// x + y*sqrt(radicand). Square factors of the radicand are moved into y,
    /// so QuadExt(0, 1, 20) == QuadExt(0, 2, 5).
    QuadExt(Rational x, Rational y, const Integer& radicand) : x_(std::move(x)), y_(std::move(y)) {
        if (radicand <= 1) throw Error("quadratic field radicand must exceed 1");
        auto [m, d] = squarefree_split(radicand);
        if (d == 1) throw Error("radicand " + radicand.str() + " is a perfect square");
        d_ = d;
        y_ *= Rational(m);
    }

    /// The rational number x inside Q(sqrt(D)).
    static QuadExt rational(Rational x, const Integer& d) { return QuadExt(std::move(x), 0, d); }
    static QuadExt sqrt_of(const Integer& d) { return QuadExt(0, 1, d); }

    const Integer& field() const noexcept { return d_; }
    const Rational& x() const noexcept { return x_; }
    const Rational& y() const noexcept { return y_; }

    bool is_zero() const noexcept { return x_ == 0 && y_ == 0; }
    bool is_rational() const noexcept { return y_ == 0; }

    QuadExt conjugate() const { return raw(x_, -y_, d_); }
    /// x^2 - D y^2.
    Rational norm() const { return x_ * x_ - Rational(d_) * y_ * y_; }

    QuadExt inverse() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero in Q(sqrt(" + d_.str() + "))");
        Rational n = norm();
        return raw(x_ / n, -y_ / n, d_);
    }

    /// Sign of the real number x + y*sqrt(D): -1, 0 or 1.
    int sign() const {
        auto sgn = [](const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); };
        int sx = sgn(x_), sy = sgn(y_);
        if (sy == 0) return sx;
        if (sx == 0 || sx == sy) return sx == 0 ? sy : sx;
        // opposite signs: compare x^2 with D y^2
        Rational lhs = x_ * x_, rhs = Rational(d_) * y_ * y_;
        if (lhs == rhs) return 0;
        return lhs > rhs ? sx : sy;
    }

    QuadExt& operator+=(const QuadExt& q) {
        check_field(q);
        x_ += q.x_;
        y_ += q.y_;
        return *this;
    }
    QuadExt& operator-=(const QuadExt& q) {
        check_field(q);
        x_ -= q.x_;
        y_ -= q.y_;
        return *this;
    }
    QuadExt& operator*=(const QuadExt& q) {
        check_field(q);
        Rational nx = x_ * q.x_ + Rational(d_) * y_ * q.y_;
        Rational ny = x_ * q.y_ + y_ * q.x_;
        x_ = std::move(nx);
        y_ = std::move(ny);
        return *this;
    }
    QuadExt& operator/=(const QuadExt& q) { return *this *= q.inverse(); }

    friend QuadExt operator+(QuadExt p, const QuadExt& q) { return p += q; }
    friend QuadExt operator-(QuadExt p, const QuadExt& q) { return p -= q; }
    friend QuadExt operator*(QuadExt p, const QuadExt& q) { return p *= q; }
    friend QuadExt operator/(QuadExt p, const QuadExt& q) { return p /= q; }
    friend QuadExt operator-(const QuadExt& p) { return raw(-p.x_, -p.y_, p.d_); }
    friend QuadExt operator*(const Rational& k, const QuadExt& p) { return raw(k * p.x_, k * p.y_, p.d_); }

    friend bool operator==(const QuadExt& p, const QuadExt& q) {
        return p.d_ == q.d_ && p.x_ == q.x_ && p.y_ == q.y_;
    }
    friend bool operator<(const QuadExt& p, const QuadExt& q) { return (p - q).sign() < 0; }
    friend bool operator>(const QuadExt& p, const QuadExt& q) { return q < p; }

    /// "x + y*sqrt(D)", dropping a zero part.
    std::string str() const {
        const std::string root = "sqrt(" + d_.str() + ")";
        const Rational ay = y_ < 0 ? Rational(-y_) : y_;
        const std::string ys = ay == 1 ? root : to_string(ay) + "*" + root;
        if (y_ == 0) return to_string(x_);
        if (x_ == 0) return (y_ < 0 ? "-" : "") + ys;
        return to_string(x_) + (y_ < 0 ? " - " : " + ") + ys;
    }

private:
    QuadExt() = default;
    static QuadExt raw(Rational x, Rational y, Integer d) {
        QuadExt q;
        q.x_ = std::move(x);
        q.y_ = std::move(y);
        q.d_ = std::move(d);
        return q;
    }
    void check_field(const QuadExt& q) const {
        if (q.d_ != d_)
            throw Error("mixing Q(sqrt(" + d_.str() + ")) with Q(sqrt(" + q.d_.str() + "))");
    }

    Rational x_{0};
    Rational y_{0};
    Integer d_{2};
};

inline QuadExt quad_inverse(const QuadExt& q) { return q.inverse(); }
inline bool is_zero(const QuadExt& q) { return q.is_zero(); }
inline std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

}  // namespace lagengel

#endif  // LAGENGEL_QUAD_EXT_HPP
