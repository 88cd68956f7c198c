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

// Fixed-seed generators shared by the property suites.

#ifndef LAGENGEL_TESTS_SUPPORT_HPP
#define LAGENGEL_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "lagengel/lagengel.hpp"

namespace lagengel::testing {

inline constexpr unsigned kSeed = 20261014;
inline constexpr int kCases = 120;

class Gen {
public:
    explicit Gen(unsigned seed = kSeed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Rational rational(int range = 5, int max_den = 4) {
        return Rational(integer(-range, range), integer(1, max_den));
    }
    Rational nonzero_rational(int range = 5, int max_den = 4) {
        Rational r;
        do r = rational(range, max_den);
        while (r == 0);
        return r;
    }

    /// Up to `terms` monomials of degree <= max_degree in the given symbols.
    Poly poly(const std::vector<std::string>& symbols, int terms = 3, int max_degree = 2) {
        Poly p;
        const int n = integer(0, terms);
        for (int t = 0; t < n; ++t) {
            Poly m(rational());
            const int deg = symbols.empty() ? 0 : integer(0, max_degree);
            for (int k = 0; k < deg; ++k) m = m * Poly::symbol(symbols[integer(0, int(symbols.size()) - 1)]);
            p += m;
        }
        return p;
    }

    CoframeForm form(unsigned degree, const std::vector<std::string>& symbols = {"a", "b"}) {
        CoframeForm f;
        for (IndexSet s = 0; s <= kVolume; ++s)
            if (degree_of(s) == degree && coin()) f += CoframeForm::monomial(poly(symbols, 2, 1), s);
        return f;
    }

    linalg::Matrix<Rational> invertible(unsigned n = kDim, int range = 2) {
        while (true) {
            linalg::Matrix<Rational> m(n, std::vector<Rational>(n));
            for (auto& row : m)
                for (auto& e : row) e = Rational(integer(-range, range));
            if (linalg::determinant(m) != 0) return m;
        }
    }

    /// Lie algebras from three sources: the families at random rational
    /// parameters, R^3 semidirect R, and Family 4 at the origin; each put
    /// through a random change of coframe.
    CoframedAlgebra lie_algebra() {
        CoframedAlgebra base;
        switch (integer(0, 2)) {
            case 0: {
                static const int ids[] = {1, 2, 3, 5, 6};
                base = build_family(ids[integer(0, 4)], Poly(rational(3, 2)), Poly(rational(3, 2)));
                break;
            }
            case 1: base = semidirect(); break;
            default: base = build_family(4, Poly(), Poly()); break;
        }
        return change_coframe(base, invertible());
    }

    /// d w_i = sum_j M_ij w_j ^ w4 (i <= 3), d w4 = 0.
    CoframedAlgebra semidirect(int range = 3) {
        std::array<CoframeForm, kDim> d;
        for (unsigned i = 1; i <= 3; ++i)
            for (unsigned j = 1; j <= 3; ++j) d[i - 1] += CoframeForm::monomial(Poly(integer(-range, range)), {j, 4});
        return CoframedAlgebra({}, d);
    }

    /// Arbitrary structure equations, Jacobi not enforced.
    CoframedAlgebra structure(int range = 1) {
        std::array<CoframeForm, kDim> d;
        for (unsigned i = 0; i < kDim; ++i)
            for (unsigned j = 1; j <= kDim; ++j)
                for (unsigned k = j + 1; k <= kDim; ++k)
                    if (integer(0, 2) == 0) d[i] += CoframeForm::monomial(Poly(integer(-range, range)), {j, k});
        return CoframedAlgebra({}, d);
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

/// Chart (x, y, u, v) with E = exp(y), F = exp(-y) and C, S = cos x, sin x.
inline CoordChart extension_chart() {
    DiffRing ring;
    for (const char* c : {"x", "y", "u", "v"}) ring.add_coordinate(c);
    ring.add_generator("E").add_generator("F").add_inverse_pair("E", "F");
    ring.add_generator("C").add_generator("S").add_trig_pair("C", "S");
    ring.set_derivative("E", "y", Poly::symbol("E")).set_derivative("F", "y", -Poly::symbol("F"));
    ring.set_derivative("C", "x", -Poly::symbol("S")).set_derivative("S", "x", Poly::symbol("C"));
    return CoordChart(ring);
}

inline ChartForm random_chart_form(Gen& g, const CoordChart& chart, unsigned degree) {
    static const std::vector<std::string> syms{"x", "y", "u", "v", "E", "F", "C", "S"};
    ChartForm f;
    for (IndexSet s = 0; s <= kVolume; ++s)
        if (degree_of(s) == degree && g.coin()) f += ChartForm::monomial(chart.scalar(g.poly(syms, 3, 2)), s);
    return f;
}

inline linalg::Matrix<Rational> transpose(const linalg::Matrix<Rational>& m) {
    linalg::Matrix<Rational> t(m[0].size(), std::vector<Rational>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

}  // namespace lagengel::testing

#endif  // LAGENGEL_TESTS_SUPPORT_HPP
