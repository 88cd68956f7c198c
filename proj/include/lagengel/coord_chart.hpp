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

#ifndef LAGENGEL_COORD_CHART_HPP
#define LAGENGEL_COORD_CHART_HPP

#include <memory>
#include <string>
#include <utility>

#include "diff_ring.hpp"
#include "form.hpp"

namespace lagengel {

using ChartForm = Form<DiffScalar>;

/// Coordinate chart (x1..x4) whose basis 1-forms are the differentials
/// dx1..dx4. Scalars live in the chart's DiffRing.
class CoordChart {
public:
    using Scalar = DiffScalar;
    using FormType = ChartForm;

    explicit CoordChart(DiffRing ring) {
        if (ring.coordinates().size() != kDim) throw Error("a chart needs exactly four coordinates");
        ring.validate();
        ring_ = std::make_shared<const DiffRing>(std::move(ring));
    }

    const DiffRingPtr& ring() const noexcept { return ring_; }
    const std::string& coordinate_name(unsigned i) const { return ring_->coordinates().at(i - 1); }

    unsigned coordinate_index(const std::string& name) const {
        for (unsigned i = 1; i <= kDim; ++i)
            if (coordinate_name(i) == name) return i;
        throw UnknownSymbolError(name);
    }

    DiffScalar scalar(const Poly& p) const { return DiffScalar(ring_, p); }
    DiffScalar symbol(const std::string& name) const { return scalar(Poly::symbol(name)); }
    /// d of the named coordinate.
    ChartForm differential(const std::string& name) const {
        return ChartForm::monomial(scalar(Poly(1)), index_bit(coordinate_index(name)));
    }
    ChartForm function(const Poly& p) const { return ChartForm::scalar(scalar(p)); }

private:
    DiffRingPtr ring_;
};

/// d(f dx_I) = sum_j (df/dx_j) dx_j ^ dx_I.
inline ChartForm exterior_derivative(const ChartForm& a, const CoordChart& ctx) {
    ChartForm out;
    for (const auto& [s, c] : a.components()) {
        if (c.ring() && c.ring() != ctx.ring() && !(*c.ring() == *ctx.ring()))
            throw ContextMismatchError("form does not belong to this chart");
        for (unsigned j = 1; j <= kDim; ++j) {
            DiffScalar dc = c.ring() ? c.derive(ctx.coordinate_name(j)) : DiffScalar();
            if (dc.is_zero() || (s & index_bit(j))) continue;
            out += wedge(ChartForm::monomial(dc, index_bit(j)), ChartForm::monomial(DiffScalar(1), s));
        }
    }
    return out;
}

}  // namespace lagengel

#endif  // LAGENGEL_COORD_CHART_HPP
