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

#ifndef LAGENGEL_LATTICES_HPP
#define LAGENGEL_LATTICES_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coframed_algebra.hpp"
#include "diff_ring.hpp"
#include "linalg.hpp"
#include "quad_ext.hpp"

namespace lagengel {

/// Structure constants [e_i, e_j] = sum_k C^k_{ij} e_k, antisymmetric in i, j.
class BracketTable {
public:
    BracketTable() = default;

    /// C^k_{ij}, 1-based.
    const Poly& constant(unsigned i, unsigned j, unsigned k) const { return c_.at(i - 1).at(j - 1).at(k - 1); }
    /// Sets C^k_{ij} and C^k_{ji} = -C^k_{ij}.
    BracketTable& set(unsigned i, unsigned j, unsigned k, const Poly& value) {
        if (i == j && !value.is_zero()) throw Error("[e_i, e_i] must vanish");
        c_.at(i - 1).at(j - 1).at(k - 1) = value;
        c_.at(j - 1).at(i - 1).at(k - 1) = -value;
        return *this;
    }
    /// Coefficients of [e_i, e_j].
    std::array<Poly, kDim> bracket(unsigned i, unsigned j) const { return c_.at(i - 1).at(j - 1); }

    bool is_zero() const {
        for (const auto& a : c_)
            for (const auto& b : a)
                for (const auto& x : b)
                    if (!x.is_zero()) return false;
        return true;
    }
    bool all_rational() const {
        for (const auto& a : c_)
            for (const auto& b : a)
                for (const auto& x : b)
                    if (!x.is_constant()) return false;
        return true;
    }

    BracketTable negated() const {
        BracketTable t;
        for (unsigned i = 0; i < kDim; ++i)
            for (unsigned j = 0; j < kDim; ++j)
                for (unsigned k = 0; k < kDim; ++k) t.c_[i][j][k] = -c_[i][j][k];
        return t;
    }

    /// Nonzero brackets with i < j, e.g. "[e2,e3] = -e1 - b*e4".
    std::vector<std::string> lines(const std::string& name = "e") const {
        std::vector<std::string> out;
        for (unsigned i = 1; i <= kDim; ++i)
            for (unsigned j = i + 1; j <= kDim; ++j) {
                CoframeForm v;
                for (unsigned k = 1; k <= kDim; ++k) v += constant(i, j, k) * CoframeForm::basis(k);
                if (v.is_zero()) continue;
                std::string rhs = v.str();
                for (std::size_t p = rhs.find('w'); p != std::string::npos; p = rhs.find('w', p + 1))
                    rhs.replace(p, 1, name);
                out.push_back("[" + name + std::to_string(i) + "," + name + std::to_string(j) + "] = " + rhs);
            }
        return out;
    }

    friend bool operator==(const BracketTable&, const BracketTable&) = default;

private:
    std::array<std::array<std::array<Poly, kDim>, kDim>, kDim> c_{};
};

/// Brackets dual to the structure equations under d w(X, Y) = -w([X, Y]):
/// [e_j, e_k] = -sum_i c^i_{jk} e_i.
inline BracketTable coframe_to_brackets(const CoframedAlgebra& a) {
    auto res = jacobi_residuals(a);
    for (unsigned i = 0; i < kDim; ++i)
        if (!res[i].is_zero())
            throw JacobiFailureError("d(d w" + std::to_string(i + 1) + ") = " + res[i].str());
    BracketTable t;
    for (unsigned j = 1; j <= kDim; ++j)
        for (unsigned k = j + 1; k <= kDim; ++k)
            for (unsigned i = 1; i <= kDim; ++i) t.set(j, k, i, -a.coefficient(i, j, k));
    return t;
}

/// Inverse of coframe_to_brackets; no Jacobi requirement.
inline CoframedAlgebra brackets_to_coframe(const BracketTable& t, std::vector<std::string> parameters = {}) {
    std::array<CoframeForm, kDim> d;
    for (unsigned i = 1; i <= kDim; ++i)
        for (unsigned j = 1; j <= kDim; ++j)
            for (unsigned k = j + 1; k <= kDim; ++k)
                d[i - 1] += CoframeForm::monomial(-t.constant(j, k, i), {j, k});
    return CoframedAlgebra(std::move(parameters), d);
}

struct BracketJacobiTerm {
    unsigned i, j, k, l;  // e_l component of the cyclic sum for e_i, e_j, e_k
    Poly value;
};

/// Nonzero components of [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
inline std::vector<BracketJacobiTerm> bracket_jacobi_residuals(const BracketTable& t) {
    std::vector<BracketJacobiTerm> out;
    auto nested = [&](unsigned i, unsigned j, unsigned k, unsigned l) {
        Poly s;
        for (unsigned m = 1; m <= kDim; ++m) s += t.constant(i, j, m) * t.constant(m, k, l);
        return s;
    };
    for (unsigned i = 1; i <= kDim; ++i)
        for (unsigned j = i + 1; j <= kDim; ++j)
            for (unsigned k = j + 1; k <= kDim; ++k)
                for (unsigned l = 1; l <= kDim; ++l) {
                    Poly v = nested(i, j, k, l) + nested(j, k, i, l) + nested(k, i, j, l);
                    if (!v.is_zero()) out.push_back({i, j, k, l, v});
                }
    return out;
}

inline bool bracket_jacobi_holds(const BracketTable& t) { return bracket_jacobi_residuals(t).empty(); }

/// Structure constants in the basis X_a = sum_i M_ai e_i.
inline BracketTable change_of_basis(const BracketTable& t, const linalg::Matrix<Rational>& m) {
    if (m.size() != kDim) throw Error("change_of_basis expects a 4x4 matrix");
    auto inv = linalg::inverse(m);
    BracketTable out;
    for (unsigned a = 0; a < kDim; ++a)
        for (unsigned b = a + 1; b < kDim; ++b)
            for (unsigned c = 0; c < kDim; ++c) {
                Poly v;
                for (unsigned i = 0; i < kDim; ++i) {
                    if (m[a][i] == 0) continue;
                    for (unsigned j = 0; j < kDim; ++j) {
                        if (m[b][j] == 0) continue;
                        for (unsigned k = 0; k < kDim; ++k)
                            if (inv[k][c] != 0)
                                v += t.constant(i + 1, j + 1, k + 1).scaled(m[a][i] * m[b][j] * inv[k][c]);
                    }
                }
                out.set(a + 1, b + 1, c + 1, v);
            }
    return out;
}

/// tr(ad e_j) = sum_k C^k_{jk}.
inline Poly adjoint_trace(const BracketTable& t, unsigned j) {
    Poly s;
    for (unsigned k = 1; k <= kDim; ++k) s += t.constant(j, k, k);
    return s;
}

/// Dimensions of g, [g, g], [g, [g, g]], ... until they stop dropping.
inline std::vector<std::size_t> lower_central_series(const BracketTable& t) {
    using Vec = std::vector<Poly>;
    auto basis_of = [](const std::vector<Vec>& vs) {
        std::vector<Vec> rows;
        for (const auto& v : vs) {
            bool nz = false;
            for (const auto& x : v) nz = nz || !x.is_zero();
            if (nz) rows.push_back(v);
        }
        if (rows.empty()) return std::vector<Vec>{};
        auto [red, prof] = linalg::row_echelon(rows, true);
        red.resize(prof.rank());
        return red;
    };
    auto bracket_with = [&](unsigned i, const Vec& v) {
        Vec out(kDim);
        for (unsigned j = 1; j <= kDim; ++j)
            if (!v[j - 1].is_zero())
                for (unsigned k = 1; k <= kDim; ++k) out[k - 1] += v[j - 1] * t.constant(i, j, k);
        return out;
    };
    std::vector<Vec> current;
    for (unsigned k = 1; k <= kDim; ++k) {
        Vec e(kDim);
        e[k - 1] = Poly(1);
        current.push_back(e);
    }
    std::vector<std::size_t> dims{kDim};
    while (!current.empty()) {
        std::vector<Vec> next;
        for (unsigned i = 1; i <= kDim; ++i)
            for (const auto& v : current) next.push_back(bracket_with(i, v));
        next = basis_of(next);
        if (next.size() == current.size()) break;
        dims.push_back(next.size());
        current = std::move(next);
    }
    return dims;
}

struct MalcevReport {
    bool nilpotent = false;
    bool rational = false;
    bool lattice_exists = false;
    std::vector<std::size_t> series;
};

/// Nilpotent with rational structure constants, which for a simply
/// connected nilpotent group is equivalent to admitting a lattice.
inline MalcevReport malcev_check(const BracketTable& t) {
    MalcevReport r;
    r.series = lower_central_series(t);
    r.nilpotent = r.series.back() == 0 && r.series.size() <= kDim + 1;
    r.rational = t.all_rational();
    r.lattice_exists = r.nilpotent && r.rational;
    return r;
}

/// Element of the nilpotent group
///   [[1, f, fe - c, d], [0, 1, 2e, fe + c], [0, 0, 1, f], [0, 0, 0, 1]].
struct NilGroupElement {
    Rational c, d, e, f;

    linalg::Matrix<Rational> matrix() const {
        return {{1, f, f * e - c, d}, {0, 1, 2 * e, f * e + c}, {0, 0, 1, f}, {0, 0, 0, 1}};
    }
    /// Parameters of a group matrix; throws if the matrix is not of that shape.
    static NilGroupElement from_matrix(const linalg::Matrix<Rational>& m) {
        NilGroupElement g{0, 0, 0, 0};
        g.f = m.at(0).at(1);
        g.e = m.at(1).at(2) / 2;
        g.c = (m.at(1).at(3) - m.at(0).at(2)) / 2;
        g.d = m.at(0).at(3);
        if (g.matrix() != m) throw Error("matrix is not an element of the nilpotent group");
        return g;
    }
    bool is_integral() const { return is_integer(c) && is_integer(d) && is_integer(e) && is_integer(f); }
    NilGroupElement inverse() const { return {-c, -d, -e, -f}; }
    friend bool operator==(const NilGroupElement&, const NilGroupElement&) = default;
    std::string str() const {
        return "(" + to_string(c) + ", " + to_string(d) + ", " + to_string(e) + ", " + to_string(f) + ")";
    }
};

/// Closed form of the matrix product.
inline NilGroupElement nil_group_mul(const NilGroupElement& g, const NilGroupElement& h) {
    return {g.c + h.c + h.f * g.e - g.f * h.e,
            g.d + h.d + g.f * h.f * h.e + g.f * h.c + g.f * h.f * g.e - g.c * h.f,
            g.e + h.e,
            g.f + h.f};
}

inline NilGroupElement operator*(const NilGroupElement& g, const NilGroupElement& h) { return nil_group_mul(g, h); }

/// Integer points: the lattice acting cocompactly, with its unit generators.
inline std::vector<NilGroupElement> nil_lattice_generators() {
    return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
}

using FormMatrix = std::vector<std::vector<CoframeForm>>;

/// d(rep) + rep ^ rep entrywise.
inline FormMatrix maurer_cartan_residual(const FormMatrix& rep, const CoframedAlgebra& a) {
    const std::size_t n = rep.size();
    for (const auto& row : rep)
        if (row.size() != n) throw Error("Maurer-Cartan matrix must be square");
    for (const auto& row : rep)
        for (const auto& x : row)
            if (!x.is_zero() && !x.has_degree(1)) throw DegreeError("Maurer-Cartan entries must be 1-forms");
    FormMatrix out(n, std::vector<CoframeForm>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            CoframeForm r = exterior_derivative(rep[i][j], a);
            for (std::size_t k = 0; k < n; ++k) r += wedge(rep[i][k], rep[k][j]);
            out[i][j] = r;
        }
    return out;
}

inline bool maurer_cartan_check(const FormMatrix& rep, const CoframedAlgebra& a) {
    for (const auto& row : maurer_cartan_residual(rep, a))
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

namespace detail {
inline CoframeForm wk(unsigned i, int sign = 1) { return Poly(sign) * CoframeForm::basis(i); }
}  // namespace detail

/// Left-invariant matrix form of the nilpotent group, for Family 1(0, 0).
inline FormMatrix nil_maurer_cartan_matrix() {
    using detail::wk;
    const CoframeForm o;
    return {{o, wk(3), wk(2, -1), wk(1, 2)}, {o, o, wk(4), wk(2)}, {o, o, o, wk(3)}, {o, o, o, o}};
}

/// Matrix form diag(w0, -w3, w3) plus the w2, w4 column, for the rebased
/// solvable coframe (w0, w2, w3, w4) stored as basis 1..4.
inline FormMatrix sol_maurer_cartan_matrix() {
    using detail::wk;
    const CoframeForm o;
    return {{wk(1), o, o, o}, {o, wk(3, -1), o, wk(2)}, {o, o, wk(3), wk(4)}, {o, o, o, o}};
}

/// theta = M w with theta_1 = beta w1, theta_3 = beta w3, theta_4 = w4 / beta:
/// takes Family 1(0, -+beta^2) to Family 1(0, -+1).
inline linalg::Matrix<Rational> family1_rescaling(const Rational& beta) {
    if (beta <= 0) throw Error("rescaling needs beta > 0");
    return {{beta, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, beta, 0}, {0, 0, 0, 1 / beta}};
}

/// (w0, w2', w3, w4') = (w1 + w4, w2 + w4, w3, w2 - w4) on Family 1(0, -1).
inline linalg::Matrix<Rational> sol_rebase_matrix() {
    return {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, -1}};
}

/// Expected structure of the rebased solvable coframe:
/// d w0 = 0, d w2 = w3^w2, d w3 = 0, d w4 = -w3^w4.
inline CoframedAlgebra sol_rebased_structure() {
    return CoframedAlgebra({}, {CoframeForm(), CoframeForm::monomial(Poly(1), {3, 2}), CoframeForm(),
                                CoframeForm::monomial(Poly(-1), {3, 4})});
}

enum class TableRelation { Equal, Negated, Different };

inline std::string to_string(TableRelation r) {
    switch (r) {
        case TableRelation::Equal: return "equal";
        case TableRelation::Negated: return "negated";
        case TableRelation::Different: return "different";
    }
    return "?";
}

inline TableRelation compare_tables(const BracketTable& computed, const BracketTable& reference) {
    if (computed == reference) return TableRelation::Equal;
    if (computed == reference.negated()) return TableRelation::Negated;
    return TableRelation::Different;
}

/// Published bracket table of the solvable b < 0 group:
/// [X1, X3] = X1, [X2, X3] = -X2.
inline BracketTable sol_reference_brackets() {
    BracketTable t;
    t.set(1, 3, 1, 1).set(2, 3, 2, -1);
    return t;
}

/// Published table of the b > 0 group before the basis change:
/// [e2, e3] = e1 + e4, [e3, e4] = e2.
inline BracketTable osc_reference_brackets_e() {
    BracketTable t;
    t.set(2, 3, 1, 1).set(2, 3, 4, 1).set(3, 4, 2, 1);
    return t;
}

/// Published table after X1 = e1 + e4, X2 = e2, X3 = e3, X4 = e1:
/// [X1, X3] = -X2, [X2, X3] = X1.
inline BracketTable osc_reference_brackets_x() {
    BracketTable t;
    t.set(1, 3, 2, -1).set(2, 3, 1, 1);
    return t;
}

/// X1 = e4, X2 = e2, X3 = e3, X4 = e1 on the rebased solvable coframe.
inline linalg::Matrix<Rational> sol_bracket_basis() {
    return {{0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}};
}

/// X1 = e1 + e4, X2 = e2, X3 = e3, X4 = e1.
inline linalg::Matrix<Rational> osc_bracket_basis() {
    return {{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}};
}

using IntMatrix2 = std::array<std::array<Integer, 2>, 2>;
using QuadVector2 = std::array<QuadExt, 2>;
using QuadMatrix2 = std::array<std::array<QuadExt, 2>, 2>;

namespace detail {

inline QuadMatrix2 quad_mul(const QuadMatrix2& x, const QuadMatrix2& y) {
    const Integer& d = x[0][0].field();
    QuadMatrix2 out{{{QuadExt::rational(0, d), QuadExt::rational(0, d)},
                     {QuadExt::rational(0, d), QuadExt::rational(0, d)}}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return out;
}

inline QuadExt quad_det(const QuadMatrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

inline QuadMatrix2 quad_adjugate(const QuadMatrix2& m) { return {{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}}; }

inline QuadMatrix2 quad_inverse(const QuadMatrix2& m) {
    QuadExt inv = quad_det(m).inverse();
    auto adj = quad_adjugate(m);
    for (auto& row : adj)
        for (auto& x : row) x = inv * x;
    return adj;
}

inline QuadMatrix2 columns(const QuadVector2& a, const QuadVector2& b) { return {{{a[0], b[0]}, {a[1], b[1]}}}; }

}  // namespace detail

/// Lattice data of the solvable group from a hyperbolic S in SL2(Z).
struct SolLatticeDescription {
    IntMatrix2 s;
    Integer trace;
    Integer square_part;  // trace^2 - 4 = square_part^2 * discriminant
    Integer discriminant;
    QuadExt c;            // larger eigenvalue
    QuadExt c_inverse;
    QuadVector2 v;        // eigenvector for c^-1
    QuadVector2 w;        // eigenvector for c
    QuadMatrix2 basis;    // (v1, v2) = (v, w)^-1
    QuadMatrix2 generators;  // det(v, w) * (v1, v2), integral in the eigenvector entries
    IntMatrix2 certificate;  // [[a1, a3], [a2, a4]]
    bool certificate_holds = false;

    QuadVector2 v1() const { return {basis[0][0], basis[1][0]}; }
    QuadVector2 v2() const { return {basis[0][1], basis[1][1]}; }
};

/// Builds (v1, v2) and the integer matrix with
/// diag(c^-1, c) = (v1, v2) [[a1, a3], [a2, a4]] (v1, v2)^-1.
inline SolLatticeDescription sl2z_lattice(const IntMatrix2& s) {
    const Integer det = s[0][0] * s[1][1] - s[0][1] * s[1][0];
    if (det != 1) throw Error("S must have determinant 1, got " + det.str());
    const Integer t = s[0][0] + s[1][1];
    const Integer disc = t * t - 4;
    if (disc <= 0) throw Error("no hyperbolic expansion: trace^2 - 4 = " + disc.str() + " <= 0");
    if (t < 0) throw Error("trace " + t.str() + " gives negative eigenvalues; positive eigenvalues are required");

    auto [m, d] = squarefree_split(disc);
    const auto q = [&](const Integer& n) { return QuadExt::rational(Rational(n), d); };
    const QuadExt c(Rational(t, 2), Rational(m, 2), d);
    const QuadExt c_inv = c.inverse();
    auto eigenvector = [&](const QuadExt& lambda) -> QuadVector2 {
        if (s[0][1] != 0) return {q(s[0][1]), lambda - q(s[0][0])};
        return {lambda - q(s[1][1]), q(s[1][0])};
    };
    const QuadVector2 v = eigenvector(c_inv);
    const QuadVector2 w = eigenvector(c);
    const QuadMatrix2 p = detail::columns(v, w);
    SolLatticeDescription out{s, t, m, d, c, c_inv, v, w, detail::quad_inverse(p), detail::quad_adjugate(p), {}, false};

    const QuadMatrix2 gamma{{{c_inv, q(0)}, {q(0), c}}};
    const QuadMatrix2 cert = detail::quad_mul(detail::quad_mul(p, gamma), detail::quad_inverse(p));
    bool integral = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const QuadExt& x = cert[i][j];
            if (!x.is_rational() || !is_integer(x.x())) {
                integral = false;
                continue;
            }
            out.certificate[i][j] = numerator_of(x.x());
        }
    if (integral) {
        QuadMatrix2 a{{{q(out.certificate[0][0]), q(out.certificate[0][1])},
                       {q(out.certificate[1][0]), q(out.certificate[1][1])}}};
        auto lhs = detail::quad_mul(detail::quad_mul(out.basis, a), detail::quad_inverse(out.basis));
        out.certificate_holds = lhs == gamma;
    }
    return out;
}

using QuadMatrix3 = std::array<std::array<QuadExt, 3>, 3>;

/// [[c^-m0, 0, x], [0, c^m0, y], [0, 0, 1]] with (x, y) = m1 g1 + m2 g2 for
/// the integral generators g1, g2.
inline QuadMatrix3 sol_lattice_element(const SolLatticeDescription& desc, long m0, long m1, long m2) {
    const Integer& d = desc.discriminant;
    auto q = [&](long n) { return QuadExt::rational(Rational(n), d); };
    QuadExt scale = q(1);
    const QuadExt& base = m0 >= 0 ? desc.c_inverse : desc.c;
    for (long k = 0; k < (m0 >= 0 ? m0 : -m0); ++k) scale = scale * base;
    QuadMatrix3 out{{{scale, q(0), q(m1) * desc.generators[0][0] + q(m2) * desc.generators[0][1]},
                     {q(0), scale.inverse(), q(m1) * desc.generators[1][0] + q(m2) * desc.generators[1][1]},
                     {q(0), q(0), q(1)}}};
    return out;
}

/// Conjugating the translation (r, s) by diag(t^-1, t) with translation
/// part (x, y) gives the translation (t r, t^-1 s); checked in the ring
/// with t * ti = 1.
struct NormalityReport {
    bool normal = false;
    std::array<std::array<DiffScalar, 3>, 3> conjugate;
};

inline NormalityReport n_normality_check() {
    auto ring = std::make_shared<DiffRing>();
    for (const char* s : {"t", "ti", "r", "s", "x", "y"}) ring->add_constant(s);
    ring->add_inverse_pair("t", "ti");
    DiffRingPtr rp = ring;
    auto sym = [&](const char* n) { return DiffScalar(rp, Poly::symbol(n)); };
    using M3 = std::array<std::array<DiffScalar, 3>, 3>;
    auto mul = [](const M3& x, const M3& y) {
        M3 o{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) o[i][j] += x[i][k] * y[k][j];
        return o;
    };
    const DiffScalar one(1), zero(0);
    M3 h{{{sym("ti"), zero, sym("x")}, {zero, sym("t"), sym("y")}, {zero, zero, one}}};
    M3 h_inv{{{sym("t"), zero, -(sym("t") * sym("x"))}, {zero, sym("ti"), -(sym("ti") * sym("y"))}, {zero, zero, one}}};
    M3 n{{{one, zero, sym("r")}, {zero, one, sym("s")}, {zero, zero, one}}};
    M3 identity{{{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}};
    M3 expected{{{one, zero, sym("t") * sym("r")}, {zero, one, sym("ti") * sym("s")}, {zero, zero, one}}};
    NormalityReport rep;
    rep.conjugate = mul(mul(h_inv, n), h);
    rep.normal = mul(h_inv, h) == identity && rep.conjugate == expected;
    return rep;
}

}  // namespace lagengel

#endif  // LAGENGEL_LATTICES_HPP
