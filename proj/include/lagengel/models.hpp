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

#ifndef LAGENGEL_MODELS_HPP
#define LAGENGEL_MODELS_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "coord_chart.hpp"
#include "families.hpp"
#include "pfaff.hpp"

namespace lagengel {

/// A coframe written in coordinates, plus the values of the algebra's
/// parameters as ring elements (e.g. b = -beta^2).
struct ChartRealization {
    CoordChart chart;
    std::array<ChartForm, kDim> coframe;
    std::map<std::string, Poly> parameter_values;
};

struct RealizationReport {
    std::array<ChartForm, kDim> residual;  // d(phi_i) - sum c^i_jk phi_j ^ phi_k
    DiffScalar volume;                     // phi_1 ^ ... ^ phi_4 coefficient
    bool independent = false;
    bool holds = false;
};

/// Checks that the chart coframe satisfies the structure equations of alg.
inline RealizationReport check_realization(const ChartRealization& r, const CoframedAlgebra& alg) {
    RealizationReport rep;
    const auto& phi = r.coframe;
    rep.volume = top_coefficient(wedge(phi[0], phi[1], phi[2], phi[3]));
    rep.independent = !rep.volume.is_zero();
    rep.holds = rep.independent;
    for (unsigned i = 1; i <= kDim; ++i) {
        ChartForm rhs;
        for (unsigned j = 1; j <= kDim; ++j)
            for (unsigned k = j + 1; k <= kDim; ++k) {
                Poly c = alg.coefficient(i, j, k).substitute(r.parameter_values);
                if (!c.is_zero()) rhs += r.chart.scalar(c) * wedge(phi[j - 1], phi[k - 1]);
            }
        rep.residual[i - 1] = exterior_derivative(phi[i - 1], r.chart) - rhs;
        rep.holds = rep.holds && rep.residual[i - 1].is_zero();
    }
    return rep;
}

/// Chart (x, y0, y1, y2) with the Engel normal form <dy0 - y1 dx, dy1 - y2 dx>.
inline ChartSubsystem engel_normal_form() {
    DiffRing ring;
    for (const char* c : {"x", "y0", "y1", "y2"}) ring.add_coordinate(c);
    CoordChart chart(ring);
    auto dx = chart.differential("x");
    return ChartSubsystem(chart, {chart.differential("y0") - chart.symbol("y1") * dx,
                                  chart.differential("y1") - chart.symbol("y2") * dx});
}

/// Family 1(0, 0): w3 = dy, w4 = dx, w2 = -x dy + du, w1 = u dy + dv.
inline ChartRealization nil_chart_model() {
    DiffRing ring;
    for (const char* c : {"x", "y", "u", "v"}) ring.add_coordinate(c);
    CoordChart chart(ring);
    auto d = [&](const char* n) { return chart.differential(n); };
    auto f = [&](const char* n) { return chart.symbol(n); };
    return {chart,
            {f("u") * d("y") + d("v"), d("u") - f("x") * d("y"), d("y"), d("x")},
            {{"a", Poly()}, {"b", Poly()}}};
}

/// Family 1(0, -beta^2) with E = exp(beta y), F = exp(-beta y):
/// w1 = (F du - E dv) / (2 beta), w2 = (F du + E dv) / 2 - x dy, w3 = dy,
/// w4 = dx - beta^2 w1.
inline ChartRealization sol_chart_model() {
    DiffRing ring;
    for (const char* c : {"x", "y", "u", "v"}) ring.add_coordinate(c);
    ring.add_constant("beta").add_constant("ibeta").add_inverse_pair("beta", "ibeta");
    ring.add_generator("E").add_generator("F").add_inverse_pair("E", "F");
    const Poly beta = Poly::symbol("beta"), e = Poly::symbol("E"), f = Poly::symbol("F");
    ring.set_derivative("E", "y", beta * e).set_derivative("F", "y", -(beta * f));
    CoordChart chart(ring);
    auto d = [&](const char* n) { return chart.differential(n); };
    auto s = [&](const Poly& p) { return chart.scalar(p); };
    const Poly ib = Poly::symbol("ibeta");
    ChartForm w1 = s((ib * f).scaled(Rational(1, 2))) * d("u") - s((ib * e).scaled(Rational(1, 2))) * d("v");
    ChartForm w2 = s(f.scaled(Rational(1, 2))) * d("u") + s(e.scaled(Rational(1, 2))) * d("v") -
                   s(Poly::symbol("x")) * d("y");
    ChartForm w4 = d("x") - s(beta * beta) * w1;
    return {chart, {w1, w2, d("y"), w4}, {{"a", Poly()}, {"b", -(beta * beta)}}};
}

/// Family 1(0, beta^2) with C = cos(beta y), S = sin(beta y):
/// w1 = (C dv - S du) / beta, w2 = C du + S dv - x dy, w3 = dy,
/// w4 = dx + beta^2 w1.
inline ChartRealization osc_chart_model() {
    DiffRing ring;
    for (const char* c : {"x", "y", "u", "v"}) ring.add_coordinate(c);
    ring.add_constant("beta").add_constant("ibeta").add_inverse_pair("beta", "ibeta");
    ring.add_generator("C").add_generator("S").add_trig_pair("C", "S");
    const Poly beta = Poly::symbol("beta"), c = Poly::symbol("C"), sn = Poly::symbol("S");
    ring.set_derivative("C", "y", -(beta * sn)).set_derivative("S", "y", beta * c);
    CoordChart chart(ring);
    auto d = [&](const char* n) { return chart.differential(n); };
    auto s = [&](const Poly& p) { return chart.scalar(p); };
    const Poly ib = Poly::symbol("ibeta");
    ChartForm w1 = s(ib * c) * d("v") - s(ib * sn) * d("u");
    ChartForm w2 = s(c) * d("u") + s(sn) * d("v") - s(Poly::symbol("x")) * d("y");
    ChartForm w4 = d("x") + s(beta * beta) * w1;
    return {chart, {w1, w2, d("y"), w4}, {{"a", Poly()}, {"b", beta * beta}}};
}

struct NormalFormReport {
    std::vector<std::size_t> engel_flag;
    bool engel = false;
    RealizationReport nil, sol, osc;
    bool all() const { return engel && nil.holds && sol.holds && osc.holds; }
};

inline NormalFormReport normal_form_check() {
    NormalFormReport r;
    r.engel_flag = derived_flag(engel_normal_form()).ranks;
    r.engel = r.engel_flag == std::vector<std::size_t>{2, 1, 0};
    const auto f1 = build_family(FamilyId(1));
    r.nil = check_realization(nil_chart_model(), f1);
    r.sol = check_realization(sol_chart_model(), f1);
    r.osc = check_realization(osc_chart_model(), f1);
    return r;
}

}  // namespace lagengel

#endif  // LAGENGEL_MODELS_HPP
