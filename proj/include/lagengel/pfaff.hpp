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

#ifndef LAGENGEL_PFAFF_HPP
#define LAGENGEL_PFAFF_HPP

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coframed_algebra.hpp"
#include "coord_chart.hpp"
#include "linalg.hpp"

namespace lagengel {

using Witness = std::map<std::string, Rational>;

/// Generic rational point for every symbol occurring in the algebra.
inline Witness witness_point(const CoframedAlgebra& a, unsigned seed = 7331) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(2, 31), den(1, 9);
    Witness w;
    std::set<std::string> symbols(a.parameters().begin(), a.parameters().end());
    for (const auto& f : a.structure())
        for (const auto& [s, c] : f.components())
            for (const auto& sym : c.symbols()) symbols.insert(sym);
    for (const auto& s : symbols) {
        Rational r(num(rng), den(rng));
        w[s] = (rng() % 2) ? r : Rational(-r);
    }
    return w;
}
inline Witness witness_point(const CoordChart& c, unsigned seed = 20260) { return c.ring()->witness(seed); }

inline Rational evaluate_at(const Poly& p, const Witness& w) { return p.eval(w); }
inline Rational evaluate_at(const DiffScalar& s, const Witness& w) { return s.value().eval(w); }

/// Span of 1-forms in a coframe or chart context.
template <class Ctx>
class Subsystem {
public:
    using FormType = typename Ctx::FormType;
    using Scalar = typename Ctx::Scalar;

    Subsystem(Ctx context, std::vector<FormType> generators)
        : context_(std::move(context)), generators_(std::move(generators)) {
        for (const auto& g : generators_)
            if (!g.has_degree(1) || g.is_zero()) throw DegreeError("subsystem generators must be nonzero 1-forms");
        if (linalg::rank(coefficient_matrix()) != generators_.size())
            throw Error("subsystem generators are linearly dependent");
    }

    const Ctx& context() const noexcept { return context_; }
    const std::vector<FormType>& generators() const noexcept { return generators_; }
    std::size_t rank() const noexcept { return generators_.size(); }

    linalg::Matrix<Scalar> coefficient_matrix() const {
        linalg::Matrix<Scalar> m;
        for (const auto& g : generators_) m.push_back(one_form_coefficients(g));
        return m;
    }

    /// Span equality over the fraction field.
    bool same_span(const Subsystem& other) const { return contains(other) && other.contains(*this); }
    bool contains(const Subsystem& other) const {
        auto m = coefficient_matrix();
        auto n = other.coefficient_matrix();
        auto joined = m;
        joined.insert(joined.end(), n.begin(), n.end());
        return linalg::rank(joined) == linalg::rank(m);
    }
    bool contains(const FormType& f) const {
        auto m = coefficient_matrix();
        auto joined = m;
        joined.push_back(one_form_coefficients(f));
        return linalg::rank(joined) == linalg::rank(m);
    }

private:
    Ctx context_;
    std::vector<FormType> generators_;
};

using CoframeSubsystem = Subsystem<CoframedAlgebra>;
using ChartSubsystem = Subsystem<CoordChart>;

/// Reduced echelon basis of the span of the given 1-forms.
template <class Ctx>
Subsystem<Ctx> span_of(const Ctx& ctx, const std::vector<typename Ctx::FormType>& forms) {
    using S = typename Ctx::Scalar;
    linalg::Matrix<S> m;
    for (const auto& f : forms)
        if (!f.is_zero()) m.push_back(one_form_coefficients(f));
    std::vector<typename Ctx::FormType> basis;
    if (!m.empty()) {
        auto [red, prof] = linalg::row_echelon(m, true);
        for (std::size_t r = 0; r < prof.rank(); ++r) basis.push_back(one_form_from(red[r]));
    }
    return Subsystem<Ctx>(ctx, std::move(basis));
}

/// Coframe subsystem spanned by basis 1-forms, e.g. {1, 2} for <w1, w2>.
inline CoframeSubsystem basis_subsystem(const CoframedAlgebra& a, const std::vector<unsigned>& indices) {
    std::vector<CoframeForm> gens;
    for (unsigned i : indices) gens.push_back(CoframeForm::basis(i));
    return CoframeSubsystem(a, std::move(gens));
}

template <class Ctx>
struct DerivedSystem {
    Subsystem<Ctx> system;
    Witness witness;
    std::size_t symbolic_kernel_rank = 0;
    std::size_t witness_kernel_rank = 0;
    std::optional<std::string> warning;  // rank ambiguity
};

/// First derived system: the theta in I with d theta = 0 mod the ideal of I.
/// theta = sum f_a theta_a qualifies iff sum f_a d(theta_a) ^ Theta = 0,
/// Theta the wedge of all generators, which is a linear condition on f.
template <class Ctx>
DerivedSystem<Ctx> derived_system(const Subsystem<Ctx>& sys) {
    using S = typename Ctx::Scalar;
    using F = typename Ctx::FormType;
    const auto& ctx = sys.context();
    const auto& gens = sys.generators();
    const std::size_t r = gens.size();
    Witness witness = witness_point(ctx);

    if (r == 0) return {sys, witness, 0, 0, std::nullopt};

    F top = gens[0];
    for (std::size_t a = 1; a < r; ++a) top = wedge(top, gens[a]);
    std::vector<F> images;
    for (const auto& g : gens) images.push_back(wedge(exterior_derivative(g, ctx), top));

    std::set<IndexSet, IndexSetLess> masks;
    for (const auto& im : images)
        for (const auto& [s, c] : im.components()) masks.insert(s);
    linalg::Matrix<S> m;
    for (IndexSet s : masks) {
        std::vector<S> row;
        for (const auto& im : images) row.push_back(im.component(s));
        m.push_back(std::move(row));
    }

    auto ker = linalg::kernel(m, r);
    std::size_t witness_rank = r;
    if (!m.empty()) {
        auto numeric = linalg::map_entries(m, [&](const S& e) { return evaluate_at(e, witness); });
        witness_rank = r - linalg::rank(numeric);
    }

    std::vector<F> derived;
    for (const auto& f : ker) {
        F theta;
        for (std::size_t a = 0; a < r; ++a) theta += f[a] * gens[a];
        derived.push_back(theta);
    }
    DerivedSystem<Ctx> out{span_of(ctx, derived), witness, ker.size(), witness_rank, std::nullopt};
    if (out.symbolic_kernel_rank != out.witness_kernel_rank)
        out.warning = "derived system rank " + std::to_string(out.symbolic_kernel_rank) +
                      " over the fraction field but " + std::to_string(out.witness_kernel_rank) +
                      " at the witness point";
    return out;
}

template <class Ctx>
struct DerivedFlag {
    std::vector<std::size_t> ranks;
    std::vector<Subsystem<Ctx>> bases;
    std::vector<std::string> warnings;
};

/// I = I^(0), I^(1), ... until the rank stops dropping.
template <class Ctx>
DerivedFlag<Ctx> derived_flag(const Subsystem<Ctx>& sys) {
    DerivedFlag<Ctx> flag;
    flag.ranks.push_back(sys.rank());
    flag.bases.push_back(sys);
    while (true) {
        auto next = derived_system(flag.bases.back());
        if (next.warning) flag.warnings.push_back(*next.warning);
        if (next.system.rank() == flag.bases.back().rank()) break;
        flag.ranks.push_back(next.system.rank());
        flag.bases.push_back(next.system);
    }
    return flag;
}

/// Flag ranks exactly [2, 1, 0].
template <class Ctx>
bool is_engel(const Subsystem<Ctx>& sys) {
    return derived_flag(sys).ranks == std::vector<std::size_t>{2, 1, 0};
}

/// Cartan (retracting) system of a rank one system <theta>: the span of theta
/// and every double contraction of theta ^ d theta.
template <class Ctx>
Subsystem<Ctx> cartan_system(const Subsystem<Ctx>& sys) {
    if (sys.rank() != 1) throw Error("cartan_system expects a rank one subsystem");
    using F = typename Ctx::FormType;
    const F& theta = sys.generators()[0];
    F phi = wedge(theta, exterior_derivative(theta, sys.context()));
    std::vector<F> forms{theta};
    for (unsigned j = 1; j <= kDim; ++j)
        for (unsigned k = j + 1; k <= kDim; ++k) forms.push_back(contract(k, contract(j, phi)));
    return span_of(sys.context(), forms);
}

struct SymplecticReport {
    bool closed = false;
    bool nondegenerate = false;
    bool lagrangian = false;
    CoframeForm d_omega;            // d Omega
    Poly omega_squared_top;         // top coefficient of Omega ^ Omega
    CoframeForm lagrangian_residual;  // Omega ^ w1 ^ w2
    bool all() const noexcept { return closed && nondegenerate && lagrangian; }
};

/// Checks Omega = w1^w3 + w2^w4 against the structure equations and the
/// Engel system <w1, w2>.
inline SymplecticReport check_symplectic(const CoframedAlgebra& a) {
    SymplecticReport rep;
    CoframeForm omega = canonical_symplectic_form();
    rep.d_omega = exterior_derivative(omega, a);
    rep.closed = rep.d_omega.is_zero();
    rep.omega_squared_top = top_coefficient(wedge(omega, omega));
    rep.nondegenerate = !rep.omega_squared_top.is_zero();
    rep.lagrangian_residual = wedge(omega, CoframeForm::basis(1), CoframeForm::basis(2));
    rep.lagrangian = rep.lagrangian_residual.is_zero();
    return rep;
}

enum class VerdictKind { Generic, NonGeneric };

enum class NonGenericSubcase {
    A3Zero,                 // A3 = 0
    A3UnitA4Zero,           // A3 = +-1, A4 = 0
    A3UnitA4Nonzero,        // A3 = +-1, A4 != 0
    A3Other,                // A3 not in {0, +-1}
};

inline std::string to_string(VerdictKind k) { return k == VerdictKind::Generic ? "Generic" : "NonGeneric"; }
inline std::string to_string(NonGenericSubcase s) {
    switch (s) {
        case NonGenericSubcase::A3Zero: return "A3=0";
        case NonGenericSubcase::A3UnitA4Zero: return "A3=+-1, A4=0";
        case NonGenericSubcase::A3UnitA4Nonzero: return "A3=+-1, A4!=0";
        case NonGenericSubcase::A3Other: return "A3 not in {0,+-1}";
    }
    return "?";
}

/// Invariants of a 1-adapted coframe. Fields that the branch does not
/// define stay empty.
struct ClassificationVerdict {
    VerdictKind kind = VerdictKind::Generic;
    Poly p3;
    Poly p4;
    std::optional<int> sign;  // the +- of the w4^w2 term when p3 = 0
    std::optional<Poly> a2;
    std::optional<Poly> a3;
    std::optional<Poly> a4;
    std::optional<Poly> q3;
    std::optional<NonGenericSubcase> subcase;
};

namespace detail {

inline Poly top(const CoframeForm& f) { return top_coefficient(f); }

inline CoframeForm w(unsigned i) { return CoframeForm::basis(i); }

}  // namespace detail

/// Throws NotAdaptedError unless <w1, w2> is Engel with derived system
/// <w1> and d w2 = w3^w4 mod (w1, w2).
inline void require_adapted(const CoframedAlgebra& a) {
    auto flag = derived_flag(basis_subsystem(a, {1, 2}));
    if (flag.ranks != std::vector<std::size_t>{2, 1, 0})
        throw NotAdaptedError("<w1, w2> is not an Engel system");
    if (!flag.bases[1].same_span(basis_subsystem(a, {1})))
        throw NotAdaptedError("first derived system of <w1, w2> is not <w1>");
    if (a.coefficient(2, 3, 4) != Poly(1))
        throw NotAdaptedError("d w2 is not w3^w4 mod (w1, w2): coefficient " + a.coefficient(2, 3, 4).str());
}

/// p3, p4 and the non-generic invariants A2, A3, A4, q3.
inline ClassificationVerdict adapted_invariants(const CoframedAlgebra& a) {
    using detail::w;
    require_adapted(a);
    const CoframeForm& dw1 = a.d(1);
    const CoframeForm omega = canonical_symplectic_form();
    const Poly half_omega2 = detail::top(wedge(omega, omega)).scaled(Rational(1, 2));

    ClassificationVerdict v;
    // w1 ^ dw1 ^ w4 = (p3 / 2) Omega ^ Omega
    Poly lhs = detail::top(wedge(w(1), dw1, w(4)));
    v.p3 = lhs.scaled(1 / half_omega2.constant_value());
    // dw1 = (p3 w3 + p4 w4) ^ w2 mod w1
    if (v.p3 != -dw1.component({2, 3})) throw Error("internal: p3 routes disagree");
    v.p4 = -dw1.component({2, 4});

    if (!v.p3.is_constant()) throw AmbiguousParameterError("p3", v.p3.str());
    if (!v.p3.is_zero()) {
        v.kind = VerdictKind::Generic;
        return v;
    }

    v.kind = VerdictKind::NonGeneric;
    if (!v.p4.is_constant()) throw AmbiguousParameterError("p4", v.p4.str());
    Rational p4 = v.p4.constant_value();
    if (p4 != 1 && p4 != -1) throw NotAdaptedError("non-generic coframe needs p4 = +-1, got " + to_string(p4));
    v.sign = p4 == 1 ? 1 : -1;

    // dw1 = +- w4^w2 + (A2 w2 + A3 w3 + A4 w4) ^ w1
    Poly a3 = -dw1.component({1, 3});
    // dw1 ^ w2 ^ w4 = -(A3 / 2) Omega ^ Omega
    if (detail::top(wedge(dw1, w(2), w(4))).scaled(-1 / half_omega2.constant_value()) != a3)
        throw Error("internal: A3 routes disagree");
    v.a3 = a3;
    if (!a3.is_constant()) throw AmbiguousParameterError("A3", a3.str());
    Rational a3v = a3.constant_value();
    if (a3v == 0) {
        v.subcase = NonGenericSubcase::A3Zero;
        return v;
    }
    if (a3v != 1 && a3v != -1) {
        v.subcase = NonGenericSubcase::A3Other;
        return v;
    }
    v.a2 = -dw1.component({1, 2});
    v.a4 = -dw1.component({1, 4});
    if (!v.a4->is_constant()) throw AmbiguousParameterError("A4", v.a4->str());
    if (v.a4->is_zero()) {
        v.subcase = NonGenericSubcase::A3UnitA4Zero;
        return v;
    }
    v.subcase = NonGenericSubcase::A3UnitA4Nonzero;
    // dw2 = q3 w3^w2 + w3^w4 mod w1
    v.q3 = -a.d(2).component({2, 3});
    return v;
}

struct GroupMembership {
    bool in_g = false;
    bool in_g1 = false;
};

/// Membership in the structure group of 0-adapted coframes
///   [[B11, 0], [(B11^T)^-1 S, (B11^T)^-1]], B11 lower triangular, S = S^T,
/// and in its 1-adapted reduction b11 * b22^2 = 1.
inline GroupMembership structure_group_member(const linalg::Matrix<Rational>& b) {
    GroupMembership out;
    if (b.size() != 4) return out;
    for (const auto& row : b)
        if (row.size() != 4) return out;
    auto block = [&](unsigned r, unsigned c) {
        linalg::Matrix<Rational> m(2, std::vector<Rational>(2));
        for (unsigned i = 0; i < 2; ++i)
            for (unsigned j = 0; j < 2; ++j) m[i][j] = b[2 * r + i][2 * c + j];
        return m;
    };
    auto b11 = block(0, 0), b12 = block(0, 1), b21 = block(1, 0), b22 = block(1, 1);
    for (const auto& row : b12)
        for (const auto& e : row)
            if (e != 0) return out;
    if (b11[0][1] != 0) return out;
    Rational det = b11[0][0] * b11[1][1];
    if (det == 0) return out;
    linalg::Matrix<Rational> b11t{{b11[0][0], b11[1][0]}, {b11[0][1], b11[1][1]}};
    auto b11t_inv = linalg::inverse(b11t);
    if (b22 != b11t_inv) return out;
    auto s = linalg::multiply(b11t, b21);
    if (s[0][1] != s[1][0]) return out;
    out.in_g = true;
    out.in_g1 = b11[0][0] * b11[1][1] * b11[1][1] == 1;
    return out;
}

}  // namespace lagengel

#endif  // LAGENGEL_PFAFF_HPP
