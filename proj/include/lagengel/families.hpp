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

#ifndef LAGENGEL_FAMILIES_HPP
#define LAGENGEL_FAMILIES_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coframed_algebra.hpp"
#include "pfaff.hpp"

namespace lagengel {

/// One of the six homogeneous families; 5 and 6 take only a.
class FamilyId {
public:
    explicit FamilyId(int index) : index_(index) {
        if (index < 1 || index > 6) throw Error("family index must be in 1..6, got " + std::to_string(index));
    }
    int index() const noexcept { return index_; }
    bool takes_b() const noexcept { return index_ <= 4; }
    std::vector<std::string> parameter_names() const {
        return takes_b() ? std::vector<std::string>{"a", "b"} : std::vector<std::string>{"a"};
    }
    std::string str() const { return "Family " + std::to_string(index_); }
    friend bool operator==(const FamilyId&, const FamilyId&) = default;

private:
    int index_;
};

inline const std::array<FamilyId, 6>& all_families() {
    static const std::array<FamilyId, 6> ids{FamilyId(1), FamilyId(2), FamilyId(3),
                                             FamilyId(4), FamilyId(5), FamilyId(6)};
    return ids;
}

namespace detail {

inline CoframeForm two(const Poly& c, unsigned i, unsigned j) { return CoframeForm::monomial(c, {i, j}); }

inline std::vector<std::string> symbols_of(std::initializer_list<Poly> ps) {
    std::set<std::string> s;
    for (const auto& p : ps)
        for (const auto& x : p.symbols()) s.insert(x);
    return {s.begin(), s.end()};
}

}  // namespace detail

/// Structure equations of a family as printed in the classification tables.
inline CoframedAlgebra build_family(FamilyId id, const Poly& a, const Poly& b_in) {
    using detail::two;
    const Poly b = id.takes_b() ? b_in : Poly();
    const Rational q(1, 4), h(1, 2);
    std::array<CoframeForm, kDim> d;
    switch (id.index()) {
        case 1:
            d = {two(1, 2, 3) + two(a, 1, 3), two(1, 3, 4), CoframeForm(), two(b, 2, 3)};
            break;
        case 2:
            d = {two(1, 2, 3) + two(a, 1, 3) + two(b, 1, 4), two(b, 1, 3) + two(1, 3, 4) + two(b, 2, 4),
                 CoframeForm(), CoframeForm()};
            break;
        case 3: {
            const Poly a2 = a * a;
            d = {two(1, 2, 3) + two(a, 1, 3) + two(-a2.scaled(q), 1, 4),
                 two(-a2.scaled(q), 1, 3) + two(1, 3, 4) + two(-a2.scaled(q), 2, 4),
                 two((a2 * b).scaled(h), 1, 3) - two((a2 * b).scaled(h), 2, 4) + two(a * b, 2, 3) +
                     two(-(a2 * a * b).scaled(q), 1, 4),
                 two(a * b, 1, 3) - two(a * b, 2, 4) + two(b.scaled(2), 2, 3) + two(-(a2 * b).scaled(h), 1, 4)};
            break;
        }
        case 4: {
            const Poly a2 = a * a, b2 = b * b;
            d = {two(1, 2, 3) + two(b, 1, 3) + two(a, 1, 4),
                 two(a2 + (a * b2).scaled(q), 1, 2) + two(a, 1, 3) + two(1, 3, 4) + two(a, 2, 4),
                 two((a2 * a).scaled(2) + (a2 * b2).scaled(h), 1, 2) + two((a * b2).scaled(h), 1, 3) +
                     two(b, 2, 3) + two(a2 * b, 1, 4) + two(a2.scaled(2), 2, 4),
                 two(a * b * (-a - Poly(q)), 1, 2) + two(a * b, 1, 3) + two(a - Poly(q), 2, 3) +
                     two(a2 - (a * b2).scaled(q), 1, 4) - two(a * b, 2, 4)};
            break;
        }
        case 5:
            d = {two(1, 1, 3) + two(1, 2, 4), two(a, 1, 2) + two(1, 3, 4), two(a, 1, 3) + two(a, 2, 4),
                 two(-a, 1, 2) - two(1, 3, 4)};
            break;
        case 6:
            d = {two(1, 1, 3) + two(1, 2, 4), two(1, 3, 4), CoframeForm(), two(a, 2, 3) - two(1, 3, 4)};
            break;
    }
    return CoframedAlgebra(id.takes_b() ? detail::symbols_of({a, b}) : detail::symbols_of({a}), d);
}

inline CoframedAlgebra build_family(FamilyId id) { return build_family(id, Poly::symbol("a"), Poly::symbol("b")); }
inline CoframedAlgebra build_family(int id, const Poly& a, const Poly& b) { return build_family(FamilyId(id), a, b); }
inline CoframedAlgebra build_family(int id) { return build_family(FamilyId(id)); }

struct VerificationReport {
    std::array<CoframeForm, kDim> jacobi;
    bool jacobi_zero = false;
    std::vector<std::size_t> flag_ranks;
    bool engel = false;
    SymplecticReport symplectic;
    std::optional<ClassificationVerdict> verdict;
    std::optional<std::string> verdict_error;
    std::vector<std::string> warnings;
    bool all_pass() const { return jacobi_zero && engel && symplectic.all() && verdict.has_value(); }
};

/// Jacobi residuals, Engel flag of <w1, w2>, symplectic checks and the
/// adapted invariants; failures are recorded, never thrown.
inline VerificationReport verify_algebra(const CoframedAlgebra& alg) {
    VerificationReport r;
    r.jacobi = jacobi_residuals(alg);
    r.jacobi_zero = true;
    for (const auto& f : r.jacobi) r.jacobi_zero = r.jacobi_zero && f.is_zero();
    auto flag = derived_flag(basis_subsystem(alg, {1, 2}));
    r.flag_ranks = flag.ranks;
    r.warnings = flag.warnings;
    r.engel = flag.ranks == std::vector<std::size_t>{2, 1, 0};
    r.symplectic = check_symplectic(alg);
    try {
        r.verdict = adapted_invariants(alg);
    } catch (const Error& e) {
        r.verdict_error = e.what();
    }
    return r;
}

inline VerificationReport verify_family(FamilyId id, const Poly& a, const Poly& b) {
    return verify_algebra(build_family(id, a, b));
}
inline VerificationReport verify_family(FamilyId id) { return verify_algebra(build_family(id)); }

enum class AnsatzCase {
    A3Nonzero,       // canonical coframe with a3 = 1, a4 = 0
    A3Zero,          // a3 = 0, a4 = 1, away from a13 = 1, a63 = -2
    A3ZeroSubcase,   // a3 = 0 with a13 = 1, a63 = -2
    General,         // every structure coefficient free
};

inline std::string to_string(AnsatzCase c) {
    switch (c) {
        case AnsatzCase::A3Nonzero: return "a3!=0";
        case AnsatzCase::A3Zero: return "a3=0";
        case AnsatzCase::A3ZeroSubcase: return "a3=0, a13=1, a63=-2";
        case AnsatzCase::General: return "general";
    }
    return "?";
}

struct AnsatzTemplate {
    AnsatzCase tag;
    std::vector<std::string> unknowns;
    CoframedAlgebra structure;
};

namespace detail {

inline Poly u(const std::string& s) { return Poly::symbol(s); }
inline Poly aij(unsigned i, unsigned j) { return u("a" + std::to_string(i) + std::to_string(j)); }

inline AnsatzTemplate make_template(AnsatzCase tag, std::array<CoframeForm, kDim> d) {
    std::set<std::string> names;
    for (const auto& f : d)
        for (const auto& [s, c] : f.components())
            for (const auto& x : c.symbols()) names.insert(x);
    std::vector<std::string> unknowns(names.begin(), names.end());
    return {tag, unknowns, CoframedAlgebra(unknowns, d)};
}

}  // namespace detail

/// Canonical coframe of the a3 != 0 branch, coefficient matrix against
/// (w12, w13, w14, w23, w24, w34).
inline AnsatzTemplate a3_nonzero_template() {
    using detail::aij;
    using detail::two;
    auto row = [](const std::array<Poly, 6>& c) {
        static const std::array<std::pair<unsigned, unsigned>, 6> pairs{
            {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
        CoframeForm f;
        for (std::size_t k = 0; k < 6; ++k) f += two(c[k], pairs[k].first, pairs[k].second);
        return f;
    };
    std::array<CoframeForm, kDim> d{
        row({0, aij(1, 3), aij(1, 4), 1, 0, 0}),
        row({aij(2, 2) - aij(3, 1), aij(1, 4), aij(2, 4), 0, aij(1, 4), 1}),
        row({aij(4, 2) - aij(5, 1), aij(1, 1) + aij(4, 3), aij(4, 4) + aij(2, 1), aij(5, 3), aij(5, 4) + aij(2, 2), 0}),
        row({aij(5, 2) - aij(6, 1), aij(5, 3), aij(5, 4) + aij(3, 1), aij(6, 3), aij(6, 4) + aij(3, 2), 0}),
    };
    return detail::make_template(AnsatzCase::A3Nonzero, d);
}

/// dw = -P w + T with P = [[p1,0,0,0],[p2,p3,0,0],[p4,p5,-p1,-p2],[p5,p6,0,-p3]],
/// p_i = sum_j a_ij w_j and T = (w2^(a3 w3 + a4 w4), a0 w3^w4, 0, -a4 w3^w4),
/// before any normalization of the a_ij.
inline std::array<CoframeForm, kDim> connection_structure(const Poly& a0, const Poly& a3, const Poly& a4) {
    using detail::aij;
    std::array<CoframeForm, 7> pi;
    for (unsigned i = 1; i <= 6; ++i)
        for (unsigned j = 1; j <= 4; ++j) pi[i] += aij(i, j) * CoframeForm::basis(j);
    const CoframeForm zero;
    const std::array<std::array<CoframeForm, kDim>, kDim> p{{
        {pi[1], zero, zero, zero},
        {pi[2], pi[3], zero, zero},
        {pi[4], pi[5], -pi[1], -pi[2]},
        {pi[5], pi[6], zero, -pi[3]},
    }};
    const auto w = [](unsigned i) { return CoframeForm::basis(i); };
    std::array<CoframeForm, kDim> d{
        wedge(w(2), a3 * w(3) + a4 * w(4)),
        a0 * wedge(w(3), w(4)),
        zero,
        -a4 * wedge(w(3), w(4)),
    };
    for (unsigned i = 0; i < kDim; ++i)
        for (unsigned j = 0; j < kDim; ++j) d[i] -= wedge(p[i][j], w(j + 1));
    return d;
}

namespace detail {

inline std::array<CoframeForm, kDim> substitute_all(std::array<CoframeForm, kDim> d,
                                                    const std::map<std::string, Poly>& values) {
    for (auto& f : d) f = f.map([&](const Poly& c) { return c.substitute(values); });
    return d;
}

}  // namespace detail

/// a3 = 0 branch with a4 = a0 = 1 and the translations a33 = 0,
/// a64 = -a32, a34 = 0, a24 = 0.
inline AnsatzTemplate a3_zero_template() {
    using detail::aij;
    auto d = connection_structure(1, 0, 1);
    d = detail::substitute_all(d, {{"a33", Poly()}, {"a64", -aij(3, 2)}, {"a34", Poly()}, {"a24", Poly()}});
    return detail::make_template(AnsatzCase::A3Zero, d);
}

/// a3 = 0 branch in the sub-case a13 = 1, a63 = -2, where only a33 = 0 and
/// a64 = -a32 are normalized.
inline AnsatzTemplate a3_zero_subcase_template() {
    using detail::aij;
    auto d = connection_structure(1, 0, 1);
    d = detail::substitute_all(d, {{"a33", Poly()}, {"a64", -aij(3, 2)}, {"a13", Poly(1)}, {"a63", Poly(-2)}});
    return detail::make_template(AnsatzCase::A3ZeroSubcase, d);
}

/// Unknown c<i><j><k> for the w_j^w_k coefficient of d w_i.
inline std::string general_unknown(unsigned i, unsigned j, unsigned k) {
    return "c" + std::to_string(i) + std::to_string(j) + std::to_string(k);
}

inline AnsatzTemplate general_template() {
    std::array<CoframeForm, kDim> d;
    for (unsigned i = 1; i <= kDim; ++i)
        for (unsigned j = 1; j <= kDim; ++j)
            for (unsigned k = j + 1; k <= kDim; ++k)
                d[i - 1] += detail::two(Poly::symbol(general_unknown(i, j, k)), j, k);
    return detail::make_template(AnsatzCase::General, d);
}

inline AnsatzTemplate ansatz_template(AnsatzCase c) {
    switch (c) {
        case AnsatzCase::A3Nonzero: return a3_nonzero_template();
        case AnsatzCase::A3Zero: return a3_zero_template();
        case AnsatzCase::A3ZeroSubcase: return a3_zero_subcase_template();
        case AnsatzCase::General: return general_template();
    }
    throw Error("unknown ansatz case");
}

/// Coefficient of w_mask in d(d w_form).
struct Constraint {
    unsigned form;
    IndexSet mask;
    Poly value;
    std::string label() const { return "d(dw" + std::to_string(form) + ")[" + index_str(mask) + "]"; }
};

/// Quadratic equations in the ansatz unknowns; entries that vanish
/// identically are dropped.
inline std::vector<Constraint> ansatz_constraints(const AnsatzTemplate& t) {
    std::vector<Constraint> out;
    auto res = jacobi_residuals(t.structure);
    for (unsigned i = 0; i < kDim; ++i)
        for (const auto& [s, c] : res[i].components()) out.push_back({i + 1, s, c});
    return out;
}

inline std::vector<Constraint> substitute(const std::vector<Constraint>& cs, const std::map<std::string, Poly>& values) {
    std::vector<Constraint> out;
    for (const auto& c : cs) out.push_back({c.form, c.mask, c.value.substitute(values)});
    return out;
}

/// Every unknown of the template receives the listed value, or zero.
inline std::map<std::string, Poly> complete_assignment(const AnsatzTemplate& t, std::map<std::string, Poly> partial) {
    for (const auto& name : t.unknowns)
        if (!partial.contains(name)) partial[name] = Poly();
    return partial;
}

inline CoframedAlgebra instantiate(const AnsatzTemplate& t, const std::map<std::string, Poly>& assignment,
                                   const std::vector<std::string>& parameters) {
    auto full = complete_assignment(t, assignment);
    return CoframedAlgebra(parameters, detail::substitute_all(t.structure.structure(), full));
}

/// Reads every structure coefficient of an algebra into the general template.
inline std::map<std::string, Poly> general_assignment(const CoframedAlgebra& alg) {
    std::map<std::string, Poly> out;
    for (unsigned i = 1; i <= kDim; ++i)
        for (unsigned j = 1; j <= kDim; ++j)
            for (unsigned k = j + 1; k <= kDim; ++k) out[general_unknown(i, j, k)] = alg.coefficient(i, j, k);
    return out;
}

struct FamilyAssignment {
    AnsatzCase tag;
    std::map<std::string, Poly> values;
};

/// Position of a family inside its branch template. Family 4 fits neither
/// normalized template (it would need a53 = b and a53 = ab at once), so it
/// is placed in the general template.
inline FamilyAssignment family_assignment(FamilyId id, const Poly& a, const Poly& b) {
    const Rational q(1, 4), h(1, 2);
    switch (id.index()) {
        case 1: return {AnsatzCase::A3Nonzero, {{"a13", a}, {"a63", b}}};
        case 2: return {AnsatzCase::A3Nonzero, {{"a13", a}, {"a14", b}}};
        case 3: {
            const Poly a2 = a * a;
            return {AnsatzCase::A3Nonzero,
                    {{"a13", a},
                     {"a14", -a2.scaled(q)},
                     {"a53", a * b},
                     {"a63", b.scaled(2)},
                     {"a43", (a2 * b).scaled(h)},
                     {"a44", -(a2 * a * b).scaled(q)},
                     {"a54", -(a2 * b).scaled(h)},
                     {"a64", -(a * b)}}};
        }
        case 4: return {AnsatzCase::General, general_assignment(build_family(id, a, b))};
        case 5: return {AnsatzCase::A3Zero, {{"a13", Poly(1)}, {"a22", a}, {"a43", a}, {"a52", -a}}};
        case 6: return {AnsatzCase::A3Zero, {{"a13", Poly(1)}, {"a63", a}}};
    }
    throw Error("unknown family");
}

}  // namespace lagengel

#endif  // LAGENGEL_FAMILIES_HPP
