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

#ifndef LAGENGEL_COMPACTNESS_HPP
#define LAGENGEL_COMPACTNESS_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "families.hpp"

namespace lagengel {

/// The basis 3-form that omits w_j.
inline CoframeForm omitted_three_form(unsigned j) {
    std::vector<unsigned> idx;
    for (unsigned i = 1; i <= kDim; ++i)
        if (i != j) idx.push_back(i);
    return CoframeForm::monomial(Poly(1), idx);
}

struct ObstructionReport {
    std::array<Poly, kDim> lambda;  // d(omitted_three_form(j)) = lambda[j-1] vol
    bool all_zero() const {
        for (const auto& l : lambda)
            if (!l.is_zero()) return false;
        return true;
    }
    /// Indices j with lambda_j not identically zero.
    std::vector<unsigned> nonzero() const {
        std::vector<unsigned> out;
        for (unsigned j = 1; j <= kDim; ++j)
            if (!lambda[j - 1].is_zero()) out.push_back(j);
        return out;
    }
};

inline ObstructionReport stokes_obstructions(const CoframedAlgebra& a) {
    ObstructionReport r;
    for (unsigned j = 1; j <= kDim; ++j) r.lambda[j - 1] = top_coefficient(exterior_derivative(omitted_three_form(j), a));
    return r;
}

/// Exact zero locus of the obstructions: either unsatisfiable, or a list of
/// forced parameter values plus any residual polynomial conditions.
struct VanishingLocus {
    bool empty = false;                   // some lambda is a nonzero constant on the locus
    std::map<std::string, Rational> forced;  // s = value
    std::vector<Poly> residual;           // remaining conditions p = 0
    std::optional<unsigned> blocking;     // j of the constant obstruction when empty
    std::vector<std::string> conditions() const {
        std::vector<std::string> out;
        for (const auto& [s, v] : forced) out.push_back(s + " = " + to_string(v));
        for (const auto& p : residual) out.push_back(p.str() + " = 0");
        return out;
    }
};

/// Propagates conditions of the form c * s^k = 0 and c * s + r = 0 until
/// nothing changes.
inline VanishingLocus vanishing_locus(const ObstructionReport& r) {
    VanishingLocus loc;
    std::array<Poly, kDim> lam = r.lambda;
    bool changed = true;
    while (changed) {
        changed = false;
        for (unsigned j = 1; j <= kDim; ++j) {
            const Poly& l = lam[j - 1];
            if (l.is_zero()) continue;
            if (l.is_constant()) {
                loc.empty = true;
                loc.blocking = j;
                return loc;
            }
            auto syms = l.symbols();
            std::optional<std::pair<std::string, Rational>> fix;
            if (l.is_monomial() && syms.size() == 1) {
                fix = {{*syms.begin(), Rational(0)}};
            } else if (syms.size() == 1 && l.total_degree() == 1) {
                const std::string& s = *syms.begin();
                fix = {{s, -l.constant_term() / l.partial(s).constant_value()}};
            }
            if (fix) {
                loc.forced[fix->first] = fix->second;
                std::map<std::string, Rational> sub{{fix->first, fix->second}};
                for (auto& x : lam) x = x.substitute(sub);
                changed = true;
                break;
            }
        }
    }
    for (const auto& l : lam)
        if (!l.is_zero()) loc.residual.push_back(l);
    return loc;
}

enum class CompactStatus { Admits, DoesNotAdmit, AdmitsOnLocus };

inline std::string to_string(CompactStatus s) {
    switch (s) {
        case CompactStatus::Admits: return "admits";
        case CompactStatus::DoesNotAdmit: return "does not admit";
        case CompactStatus::AdmitsOnLocus: return "admits on locus";
    }
    return "?";
}

/// How the Family 1 survivors with a = 0 are realized.
enum class Construction { NilpotentLattice, SolvableLattice, BracketClassification, DependsOnSign };

inline std::string to_string(Construction c) {
    switch (c) {
        case Construction::NilpotentLattice: return "b = 0: nilpotent group, integer lattice";
        case Construction::SolvableLattice: return "b < 0: solvable group, SL2(Z) lattice";
        case Construction::BracketClassification: return "b > 0: solvable group, lattice from the bracket table";
        case Construction::DependsOnSign: return "b = 0 nilpotent lattice; b < 0 SL2(Z) lattice; b > 0 bracket table";
    }
    return "?";
}

struct Reduction {
    int family = 1;
    Poly a;
    Poly b;
    std::string str() const { return "Family " + std::to_string(family) + "(" + a.str() + ", " + b.str() + ")"; }
};

struct CompactVerdict {
    FamilyId id{1};
    ObstructionReport obstructions;
    CompactStatus status = CompactStatus::DoesNotAdmit;
    VanishingLocus locus;
    std::optional<Reduction> reduces_to;  // set when the survivor is a different family's member
    std::optional<Reduction> survivor;    // the Family 1 member realized on the locus
    std::optional<Construction> construction;
    std::vector<std::string> justification;
    bool admits_somewhere() const { return status != CompactStatus::DoesNotAdmit; }
};

namespace detail {

inline std::string omitted_name(unsigned j) { return index_str(omitted_three_form(j).components().begin()->first); }

inline std::optional<Construction> construction_for(const Poly& b) {
    if (!b.is_constant()) return Construction::DependsOnSign;
    Rational v = b.constant_value();
    if (v == 0) return Construction::NilpotentLattice;
    return v < 0 ? Construction::SolvableLattice : Construction::BracketClassification;
}

}  // namespace detail

/// Stokes obstructions of the family, their exact vanishing locus, and the
/// Family 1 member that survives on it with its lattice construction.
inline CompactVerdict compact_quotient_verdict(FamilyId id, const Poly& a, const Poly& b) {
    CompactVerdict v;
    v.id = id;
    const CoframedAlgebra alg = build_family(id, a, b);
    v.obstructions = stokes_obstructions(alg);
    for (unsigned j : v.obstructions.nonzero())
        v.justification.push_back("d(" + detail::omitted_name(j) + ") = " + v.obstructions.lambda[j - 1].str() +
                                  " vol");
    v.locus = vanishing_locus(v.obstructions);
    if (v.locus.empty) {
        v.status = CompactStatus::DoesNotAdmit;
        unsigned j = *v.locus.blocking;
        v.justification.push_back("vol is exact: d(" + detail::omitted_name(j) +
                                  ") is a nonzero constant multiple of it; by Stokes no compact quotient exists");
        return v;
    }
    if (!v.locus.residual.empty()) {
        v.status = CompactStatus::AdmitsOnLocus;
        v.justification.push_back("unresolved vanishing conditions remain");
        return v;
    }
    v.status = v.locus.forced.empty() ? CompactStatus::Admits : CompactStatus::AdmitsOnLocus;

    std::map<std::string, Poly> sub;
    for (const auto& [s, val] : v.locus.forced) sub[s] = Poly(val);
    const CoframedAlgebra on_locus = alg.substitute(sub);
    // Family 1(0, b') has dw1 = w2^w3, dw2 = w3^w4, dw3 = 0, dw4 = b' w2^w3.
    const Poly b1 = on_locus.coefficient(4, 2, 3);
    Reduction target{1, Poly(), b1};
    if (!(build_family(FamilyId(1), Poly(), b1) == on_locus)) {
        v.status = CompactStatus::AdmitsOnLocus;
        v.justification.push_back("obstructions vanish but the algebra is not a Family 1 member with a = 0");
        return v;
    }
    v.survivor = target;
    if (id.index() != 1) {
        v.reduces_to = target;
        v.justification.push_back("on the locus the structure equations coincide with " + target.str());
    }
    v.construction = detail::construction_for(b1);
    v.justification.push_back(to_string(*v.construction));
    return v;
}

inline CompactVerdict compact_quotient_verdict(FamilyId id) {
    return compact_quotient_verdict(id, Poly::symbol("a"), Poly::symbol("b"));
}

/// lambda_j against the adjoint trace: lambda_j = (-1)^j tr(ad e_j) under
/// d w(X, Y) = -w([X, Y]).
inline std::array<Poly, kDim> adjoint_traces(const CoframedAlgebra& a) {
    std::array<Poly, kDim> tr;
    for (unsigned j = 1; j <= kDim; ++j)
        for (unsigned k = 1; k <= kDim; ++k) {
            if (k == j) continue;
            // [e_j, e_k] = -sum_i c^i_{jk} e_i; the e_k component is -c^k_{jk}.
            tr[j - 1] -= a.d(k).component({j, k});
        }
    return tr;
}

}  // namespace lagengel

#endif  // LAGENGEL_COMPACTNESS_HPP
