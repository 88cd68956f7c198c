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

#ifndef LAGENGEL_FORM_HPP
#define LAGENGEL_FORM_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"

namespace lagengel {

/// Number of coframe elements. Everything here lives on 4-manifolds.
inline constexpr unsigned kDim = 4;

/// Strictly increasing index tuple (i1 < ... < ik) over {1,2,3,4}, stored
/// as a bit mask with bit i-1 set for index i.
using IndexSet = std::uint8_t;

inline constexpr IndexSet kVolume = 0b1111;

inline constexpr IndexSet index_bit(unsigned i) { return static_cast<IndexSet>(1u << (i - 1)); }

inline unsigned degree_of(IndexSet s) { return static_cast<unsigned>(std::popcount(s)); }

inline std::vector<unsigned> indices_of(IndexSet s) {
    std::vector<unsigned> out;
    for (unsigned i = 1; i <= kDim; ++i)
        if (s & index_bit(i)) out.push_back(i);
    return out;
}

/// Index set of an arbitrary tuple together with the sign of the sorting
/// permutation; sign 0 when an index repeats.
inline std::pair<IndexSet, int> normalize_indices(const std::vector<unsigned>& tuple) {
    IndexSet s = 0;
    int sign = 1;
    for (std::size_t a = 0; a < tuple.size(); ++a) {
        if (tuple[a] < 1 || tuple[a] > kDim) throw Error("coframe index out of range");
        if (s & index_bit(tuple[a])) return {0, 0};
        s |= index_bit(tuple[a]);
        for (std::size_t b = a + 1; b < tuple.size(); ++b)
            if (tuple[a] > tuple[b]) sign = -sign;
    }
    return {s, sign};
}

/// Sign of omega_A ^ omega_B in terms of omega_{A u B}; 0 if they overlap.
inline int wedge_sign(IndexSet a, IndexSet b) {
    if (a & b) return 0;
    int inversions = 0;
    for (unsigned i = 1; i <= kDim; ++i)
        if (a & index_bit(i))
            for (unsigned j = 1; j < i; ++j)
                if (b & index_bit(j)) ++inversions;
    return inversions % 2 ? -1 : 1;
}

/// Degree first, then lexicographic on the index tuple.
struct IndexSetLess {
    bool operator()(IndexSet x, IndexSet y) const {
        unsigned dx = degree_of(x), dy = degree_of(y);
        if (dx != dy) return dx < dy;
        return indices_of(x) < indices_of(y);
    }
};

inline std::string index_str(IndexSet s) {
    std::string out;
    for (unsigned i : indices_of(s)) {
        if (!out.empty()) out += "^";
        out += "w" + std::to_string(i);
    }
    return out;
}

/// Exterior form on a 4-dimensional coframe with coefficients in S. S is
/// Poly for left-invariant (coframe) forms and DiffScalar for chart forms.
/// Forms may be inhomogeneous; operations requiring a degree check it.
template <class S>
class Form {
public:
    using Scalar = S;
    using Components = std::map<IndexSet, S, IndexSetLess>;

    Form() = default;

    static Form scalar(const S& f) { return monomial(f, 0); }
    /// The basis 1-form number i (1-based).
    static Form basis(unsigned i) {
        if (i < 1 || i > kDim) throw Error("coframe index out of range");
        return monomial(S(1), index_bit(i));
    }
    static Form monomial(const S& f, IndexSet s) {
        Form out;
        out.add(s, f);
        return out;
    }
    /// f * omega_{i1} ^ ... ^ omega_{ik} for an unsorted tuple.
    static Form monomial(const S& f, const std::vector<unsigned>& tuple) {
        auto [s, sign] = normalize_indices(tuple);
        Form out;
        if (sign != 0) out.add(s, sign > 0 ? f : -f);
        return out;
    }

    const Components& components() const noexcept { return components_; }
    bool is_zero() const noexcept { return components_.empty(); }

    S component(IndexSet s) const {
        auto it = components_.find(s);
        return it == components_.end() ? S(0) : it->second;
    }
    S component(const std::vector<unsigned>& tuple) const {
        auto [s, sign] = normalize_indices(tuple);
        if (sign == 0) return S(0);
        return sign > 0 ? component(s) : -component(s);
    }

    bool is_homogeneous() const {
        if (components_.empty()) return true;
        unsigned d = degree_of(components_.begin()->first);
        for (const auto& [s, c] : components_)
            if (degree_of(s) != d) return false;
        return true;
    }
    /// Degree of a nonzero homogeneous form.
    std::optional<unsigned> degree() const {
        if (components_.empty() || !is_homogeneous()) return std::nullopt;
        return degree_of(components_.begin()->first);
    }
    bool has_degree(unsigned d) const {
        for (const auto& [s, c] : components_)
            if (degree_of(s) != d) return false;
        return true;
    }

    Form& operator+=(const Form& b) {
        for (const auto& [s, c] : b.components_) add(s, c);
        return *this;
    }
    Form& operator-=(const Form& b) {
        for (const auto& [s, c] : b.components_) add(s, -c);
        return *this;
    }
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator-(const Form& a) {
        Form out;
        for (const auto& [s, c] : a.components_) out.components_.emplace(s, -c);
        return out;
    }
    friend Form operator*(const S& f, const Form& a) {
        Form out;
        for (const auto& [s, c] : a.components_) out.add(s, f * c);
        return out;
    }
    friend bool operator==(const Form& a, const Form& b) { return a.components_ == b.components_; }

    /// Coefficientwise map into another scalar type.
    template <class F>
    auto map(F&& f) const {
        using T = decltype(f(std::declval<const S&>()));
        Form<T> out;
        for (const auto& [s, c] : components_) out += Form<T>::monomial(f(c), s);
        return out;
    }

    std::string str() const {
        if (components_.empty()) return "0";
        std::string out;
        for (const auto& [s, c] : components_) {
            std::string coef = to_string(c);
            bool negative = !coef.empty() && coef[0] == '-' && is_single_term(c);
            if (negative) coef = coef.substr(1);
            if (!out.empty()) out += negative ? " - " : " + ";
            else if (negative) out += "-";
            if (s == 0) {
                out += is_single_term(c) ? coef : "(" + coef + ")";
            } else {
                if (coef != "1") out += (is_single_term(c) ? coef : "(" + coef + ")") + "*";
                out += index_str(s);
            }
        }
        return out;
    }

private:
    static bool is_single_term(const S& c) {
        if constexpr (requires { c.is_monomial(); }) {
            return c.is_monomial();
        } else if constexpr (requires { c.value().is_monomial(); }) {
            return c.value().is_monomial();
        } else {
            return true;
        }
    }

    void add(IndexSet s, const S& c) {
        if (is_zero_scalar(c)) return;
        auto [it, inserted] = components_.try_emplace(s, c);
        if (!inserted) {
            it->second = it->second + c;
            if (is_zero_scalar(it->second)) components_.erase(it);
        }
    }
    static bool is_zero_scalar(const S& c) { return lagengel::is_zero(c); }

    Components components_;
};

/// Graded product. Terms of total degree above four vanish.
template <class S>
Form<S> wedge(const Form<S>& a, const Form<S>& b) {
    Form<S> out;
    for (const auto& [sa, ca] : a.components()) {
        for (const auto& [sb, cb] : b.components()) {
            int sign = wedge_sign(sa, sb);
            if (sign == 0) continue;
            S c = ca * cb;
            out += Form<S>::monomial(sign > 0 ? c : -c, static_cast<IndexSet>(sa | sb));
        }
    }
    return out;
}

template <class S, class... Rest>
Form<S> wedge(const Form<S>& a, const Form<S>& b, const Rest&... rest) {
    return wedge(wedge(a, b), rest...);
}

/// Interior product with the dual frame vector e_j.
template <class S>
Form<S> contract(unsigned j, const Form<S>& a) {
    if (j < 1 || j > kDim) throw Error("frame index out of range");
    Form<S> out;
    for (const auto& [s, c] : a.components()) {
        if (s == 0) throw DegreeError("cannot contract a 0-form");
        if (!(s & index_bit(j))) continue;
        unsigned position = 0;
        for (unsigned i = 1; i < j; ++i)
            if (s & index_bit(i)) ++position;
        out += Form<S>::monomial(position % 2 ? -c : c, static_cast<IndexSet>(s & ~index_bit(j)));
    }
    return out;
}

/// The scalar with a = lambda * w1^w2^w3^w4.
template <class S>
S top_coefficient(const Form<S>& a) {
    if (!a.has_degree(kDim)) throw DegreeError("top_coefficient expects a 4-form, got " + a.str());
    return a.component(kVolume);
}

/// Rewrites a form by replacing each basis 1-form w_k with
/// sum_l sub[k-1][l-1] * theta_l.
template <class S>
Form<S> linear_substitute(const Form<S>& a, const linalg::Matrix<S>& sub) {
    std::array<Form<S>, kDim> images;
    for (unsigned k = 0; k < kDim; ++k)
        for (unsigned l = 0; l < kDim; ++l) images[k] += Form<S>::monomial(sub[k][l], index_bit(l + 1));
    Form<S> out;
    for (const auto& [s, c] : a.components()) {
        Form<S> term = Form<S>::scalar(c);
        for (unsigned i : indices_of(s)) term = wedge(term, images[i - 1]);
        out += term;
    }
    return out;
}

/// Coefficient row (length 4) of a 1-form.
template <class S>
std::vector<S> one_form_coefficients(const Form<S>& a) {
    if (!a.has_degree(1)) throw DegreeError("expected a 1-form, got " + a.str());
    std::vector<S> row;
    for (unsigned i = 1; i <= kDim; ++i) row.push_back(a.component(index_bit(i)));
    return row;
}

template <class S>
Form<S> one_form_from(const std::vector<S>& row) {
    Form<S> out;
    for (unsigned i = 1; i <= kDim; ++i) out += Form<S>::monomial(row[i - 1], index_bit(i));
    return out;
}

}  // namespace lagengel

#endif  // LAGENGEL_FORM_HPP
