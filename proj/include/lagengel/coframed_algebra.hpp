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

#ifndef LAGENGEL_COFRAMED_ALGEBRA_HPP
#define LAGENGEL_COFRAMED_ALGEBRA_HPP

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "form.hpp"
#include "poly.hpp"

namespace lagengel {

using CoframeForm = Form<Poly>;

/// Left-invariant coframe w1..w4 given by its structure equations
/// d w_i = sum_{j<k} c^i_{jk} w_j ^ w_k, coefficients polynomial in the
/// declared parameters.
class CoframedAlgebra {
public:
    using Scalar = Poly;
    using FormType = CoframeForm;

    CoframedAlgebra() = default;
    CoframedAlgebra(std::vector<std::string> parameters, std::array<CoframeForm, kDim> structure)
        : parameters_(std::move(parameters)), structure_(std::move(structure)) {
        for (unsigned i = 0; i < kDim; ++i)
            if (!structure_[i].has_degree(2))
                throw DegreeError("d w" + std::to_string(i + 1) + " must be a 2-form, got " + structure_[i].str());
    }

    const std::vector<std::string>& parameters() const noexcept { return parameters_; }
    const std::array<CoframeForm, kDim>& structure() const noexcept { return structure_; }
    /// d w_i, 1-based.
    const CoframeForm& d(unsigned i) const { return structure_.at(i - 1); }

    /// c^i_{jk} for j < k (1-based indices); antisymmetric extension otherwise.
    Poly coefficient(unsigned i, unsigned j, unsigned k) const { return d(i).component({j, k}); }

    /// Specializes some parameters; the remaining ones stay declared.
    CoframedAlgebra substitute(const std::map<std::string, Poly>& values) const {
        std::array<CoframeForm, kDim> s;
        for (unsigned i = 0; i < kDim; ++i)
            s[i] = structure_[i].map([&](const Poly& c) { return c.substitute(values); });
        std::vector<std::string> remaining;
        for (const auto& p : parameters_)
            if (!values.contains(p)) remaining.push_back(p);
        for (const auto& [name, v] : values)
            for (const auto& sym : v.symbols())
                if (std::find(remaining.begin(), remaining.end(), sym) == remaining.end()) remaining.push_back(sym);
        return CoframedAlgebra(std::move(remaining), std::move(s));
    }
    CoframedAlgebra substitute(const std::map<std::string, Rational>& values) const {
        std::map<std::string, Poly> as_poly;
        for (const auto& [k, v] : values) as_poly.emplace(k, Poly(v));
        return substitute(as_poly);
    }

    friend bool operator==(const CoframedAlgebra& a, const CoframedAlgebra& b) {
        return a.structure_ == b.structure_;
    }

private:
    std::vector<std::string> parameters_;
    std::array<CoframeForm, kDim> structure_{};
};

/// Exterior derivative induced by the structure equations. Coefficients
/// are constants, so only the Leibniz expansion over basis factors remains.
inline CoframeForm exterior_derivative(const CoframeForm& a, const CoframedAlgebra& ctx) {
    CoframeForm out;
    for (const auto& [s, c] : a.components()) {
        auto idx = indices_of(s);
        for (std::size_t m = 0; m < idx.size(); ++m) {
            CoframeForm term = CoframeForm::scalar(m % 2 ? -c : c);
            for (std::size_t t = 0; t < idx.size(); ++t)
                term = wedge(term, t == m ? ctx.d(idx[t]) : CoframeForm::basis(idx[t]));
            out += term;
        }
    }
    return out;
}

/// d(d w_i) for i = 1..4; all zero iff the structure equations come from a
/// Lie algebra.
inline std::array<CoframeForm, kDim> jacobi_residuals(const CoframedAlgebra& a) {
    std::array<CoframeForm, kDim> out;
    for (unsigned i = 1; i <= kDim; ++i) out[i - 1] = exterior_derivative(a.d(i), a);
    return out;
}

inline bool jacobi_holds(const CoframedAlgebra& a) {
    for (const auto& r : jacobi_residuals(a))
        if (!r.is_zero()) return false;
    return true;
}

/// Structure equations of the coframe theta = M w (rows of M express each
/// theta_i in the old coframe).
inline CoframedAlgebra change_coframe(const CoframedAlgebra& a, const linalg::Matrix<Rational>& m) {
    auto inv = linalg::inverse(m);
    linalg::Matrix<Poly> back(kDim, std::vector<Poly>(kDim));
    for (unsigned k = 0; k < kDim; ++k)
        for (unsigned l = 0; l < kDim; ++l) back[k][l] = Poly(inv[k][l]);
    std::array<CoframeForm, kDim> s;
    for (unsigned i = 0; i < kDim; ++i) {
        CoframeForm dtheta;
        for (unsigned j = 0; j < kDim; ++j) dtheta += Poly(m[i][j]) * a.d(j + 1);
        s[i] = linear_substitute(dtheta, back);
    }
    return CoframedAlgebra(a.parameters(), std::move(s));
}

/// Symplectic form w1^w3 + w2^w4 of a 0-adapted coframe.
inline CoframeForm canonical_symplectic_form() {
    return CoframeForm::monomial(Poly(1), {1, 3}) + CoframeForm::monomial(Poly(1), {2, 4});
}

}  // namespace lagengel

#endif  // LAGENGEL_COFRAMED_ALGEBRA_HPP
