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

#ifndef LAGENGEL_LINALG_HPP
#define LAGENGEL_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "diff_ring.hpp"
#include "poly.hpp"
#include "rational.hpp"

// Division-free linear algebra over an exact integral domain S (Rational,
// Poly, DiffScalar). Ranks are ranks over the fraction field of S.

namespace lagengel::linalg {

template <class S>
using Matrix = std::vector<std::vector<S>>;

inline std::optional<Rational> as_rational(const Rational& r) { return r; }
inline std::optional<Rational> as_rational(const Poly& p) {
    if (p.is_constant()) return p.constant_value();
    return std::nullopt;
}
inline std::optional<Rational> as_rational(const DiffScalar& s) { return as_rational(s.value()); }

struct RankProfile {
    std::vector<std::size_t> pivot_rows;  // indices into the input rows
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const noexcept { return pivot_cols.size(); }
};

/// Fraction-free Gaussian elimination. Returns the (optionally reduced) row
/// echelon form together with the original indices of the pivot rows.
/// Pivots that are nonzero constants are scaled to one.
template <class S>
std::pair<Matrix<S>, RankProfile> row_echelon(Matrix<S> m, bool reduced = false) {
    RankProfile profile;
    if (m.empty()) return {m, profile};
    const std::size_t rows = m.size(), cols = m.front().size();
    std::vector<std::size_t> origin(rows);
    for (std::size_t i = 0; i < rows; ++i) origin[i] = i;

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        // prefer a constant pivot, it keeps entries small
        std::optional<std::size_t> constant_pivot;
        bool found = false;
        for (std::size_t i = r; i < rows; ++i) {
            if (is_zero(m[i][c])) continue;
            if (!found) {
                p = i;
                found = true;
            }
            if (as_rational(m[i][c])) {
                constant_pivot = i;
                break;
            }
        }
        if (!found) continue;
        if (constant_pivot) p = *constant_pivot;
        std::swap(m[r], m[p]);
        std::swap(origin[r], origin[p]);
        if (auto k = as_rational(m[r][c])) {
            Rational inv = 1 / *k;
            for (auto& e : m[r]) e = e * S(inv);
        }
        const S pivot = m[r][c];
        for (std::size_t i = (reduced ? 0 : r + 1); i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            const S factor = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = pivot * m[i][j] - factor * m[r][j];
        }
        profile.pivot_rows.push_back(origin[r]);
        profile.pivot_cols.push_back(c);
        ++r;
    }
    return {m, profile};
}

template <class S>
RankProfile rank_profile(const Matrix<S>& m) {
    return row_echelon(m).second;
}

template <class S>
std::size_t rank(const Matrix<S>& m) {
    return rank_profile(m).rank();
}

/// Laplace expansion along the first row; sizes here never exceed 6.
template <class S>
S determinant(const Matrix<S>& m) {
    const std::size_t n = m.size();
    if (n == 0) return S(1);
    if (n == 1) return m[0][0];
    if (n == 2) return S(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
    S total(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(m[0][j])) continue;
        Matrix<S> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<S> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        S term = S(m[0][j] * determinant(minor));
        if (j % 2 == 0) total += term;
        else total -= term;
    }
    return total;
}

/// Basis of the right kernel {x : m x = 0} over the fraction field, with
/// entries in S (Cramer's rule on a nonsingular pivot block).
template <class S>
std::vector<std::vector<S>> kernel(const Matrix<S>& m, std::size_t cols) {
    RankProfile prof = m.empty() ? RankProfile{} : rank_profile(m);
    const std::size_t rho = prof.rank();
    Matrix<S> block(rho, std::vector<S>(rho));
    for (std::size_t a = 0; a < rho; ++a)
        for (std::size_t b = 0; b < rho; ++b) block[a][b] = m[prof.pivot_rows[a]][prof.pivot_cols[b]];
    const S det = determinant(block);

    std::vector<bool> is_pivot(cols, false);
    for (auto c : prof.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<S>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<S> x(cols, S(0));
        x[f] = det;
        for (std::size_t t = 0; t < rho; ++t) {
            Matrix<S> replaced = block;
            for (std::size_t a = 0; a < rho; ++a) replaced[a][t] = m[prof.pivot_rows[a]][f];
            x[prof.pivot_cols[t]] = -determinant(replaced);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Entrywise map, e.g. evaluation at a witness point.
template <class S, class F>
auto map_entries(const Matrix<S>& m, F&& f) {
    using T = decltype(f(m[0][0]));
    Matrix<T> out;
    for (const auto& row : m) {
        std::vector<T> r;
        for (const auto& e : row) r.push_back(f(e));
        out.push_back(std::move(r));
    }
    return out;
}

/// Inverse of a square rational matrix; throws SingularMatrixError.
inline Matrix<Rational> inverse(const Matrix<Rational>& m) {
    const std::size_t n = m.size();
    Matrix<Rational> aug(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw Error("inverse of a non-square matrix");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto [red, prof] = row_echelon(aug, true);
    if (prof.rank() < n || prof.pivot_cols.back() >= n) throw SingularMatrixError("matrix is singular");
    Matrix<Rational> out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = red[i][n + j];
    return out;
}

template <class S>
Matrix<S> multiply(const Matrix<S>& a, const Matrix<S>& b) {
    Matrix<S> out(a.size(), std::vector<S>(b.empty() ? 0 : b.front().size(), S(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
    return out;
}

template <class S>
Matrix<S> identity(std::size_t n) {
    Matrix<S> out(n, std::vector<S>(n, S(0)));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = S(1);
    return out;
}

}  // namespace lagengel::linalg

#endif  // LAGENGEL_LINALG_HPP
