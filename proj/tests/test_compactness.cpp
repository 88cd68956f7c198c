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

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace lagengel {
namespace {

using testing::Gen;
using testing::kCases;

const Poly a = Poly::symbol("a"), b = Poly::symbol("b");

// lambda index j is the omitted coframe element: 4 -> w123, 3 -> w124.
Poly lambda(int family, unsigned j) { return stokes_obstructions(build_family(family)).lambda[j - 1]; }

TEST(Obstructions, FamilyTable) {
    EXPECT_EQ(lambda(1, 3), -a);
    EXPECT_EQ(lambda(1, 1), Poly());
    EXPECT_EQ(lambda(1, 2), Poly());
    EXPECT_EQ(lambda(1, 4), Poly());
    EXPECT_EQ(lambda(2, 4), b.scaled(2));
    EXPECT_EQ(lambda(3, 4), -(a * a).scaled(Rational(1, 2)));
    EXPECT_EQ(lambda(4, 4), a.scaled(2));
    EXPECT_EQ(lambda(4, 3), -b);
    EXPECT_EQ(lambda(5, 3), Poly(-2));
    EXPECT_EQ(lambda(6, 3), Poly(-2));
}

TEST(Obstructions, NonzeroIndices) {
    auto o = stokes_obstructions(build_family(6));
    EXPECT_EQ(o.nonzero(), (std::vector<unsigned>{3}));
    EXPECT_FALSE(o.all_zero());
    EXPECT_TRUE(stokes_obstructions(build_family(1, Poly(), b)).all_zero());
}

TEST(Locus, Families) {
    auto l1 = vanishing_locus(stokes_obstructions(build_family(1)));
    EXPECT_FALSE(l1.empty);
    EXPECT_EQ(l1.conditions(), (std::vector<std::string>{"a = 0"}));
    auto l2 = vanishing_locus(stokes_obstructions(build_family(2)));
    EXPECT_EQ(l2.conditions(), (std::vector<std::string>{"a = 0", "b = 0"}));
    auto l5 = vanishing_locus(stokes_obstructions(build_family(5)));
    EXPECT_TRUE(l5.empty);
    EXPECT_EQ(l5.blocking, 3u);
}

TEST(Verdict, SpecificParameters) {
    auto v = compact_quotient_verdict(FamilyId(1), Poly(), Poly(-1));
    EXPECT_EQ(v.status, CompactStatus::Admits);
    EXPECT_EQ(v.construction, Construction::SolvableLattice);

    v = compact_quotient_verdict(FamilyId(1), Poly(), Poly());
    EXPECT_EQ(v.construction, Construction::NilpotentLattice);
    v = compact_quotient_verdict(FamilyId(1), Poly(), Poly(3));
    EXPECT_EQ(v.construction, Construction::BracketClassification);

    v = compact_quotient_verdict(FamilyId(4), Poly(1), Poly());
    EXPECT_EQ(v.status, CompactStatus::DoesNotAdmit);
    EXPECT_EQ(v.obstructions.lambda[3], Poly(2));

    v = compact_quotient_verdict(FamilyId(6), Poly(3), Poly());
    EXPECT_EQ(v.status, CompactStatus::DoesNotAdmit);
    EXPECT_EQ(v.obstructions.lambda[2], Poly(-2));
    ASSERT_FALSE(v.justification.empty());
    EXPECT_NE(v.justification.back().find("Stokes"), std::string::npos);
}

TEST(Verdict, SymbolicFamilies) {
    auto v1 = compact_quotient_verdict(FamilyId(1));
    EXPECT_EQ(v1.status, CompactStatus::AdmitsOnLocus);
    EXPECT_FALSE(v1.reduces_to.has_value());
    EXPECT_EQ(v1.construction, Construction::DependsOnSign);

    auto v2 = compact_quotient_verdict(FamilyId(2));
    ASSERT_TRUE(v2.reduces_to);
    EXPECT_EQ(v2.reduces_to->str(), "Family 1(0, 0)");
    EXPECT_EQ(v2.construction, Construction::NilpotentLattice);

    auto v3 = compact_quotient_verdict(FamilyId(3));
    ASSERT_TRUE(v3.reduces_to);
    EXPECT_EQ(v3.reduces_to->b, b.scaled(2));
    EXPECT_EQ(v3.locus.conditions(), (std::vector<std::string>{"a = 0"}));

    auto v4 = compact_quotient_verdict(FamilyId(4));
    ASSERT_TRUE(v4.reduces_to);
    EXPECT_EQ(v4.reduces_to->b, Poly(Rational(-1, 4)));
    EXPECT_EQ(v4.construction, Construction::SolvableLattice);

    for (int i : {5, 6}) EXPECT_EQ(compact_quotient_verdict(FamilyId(i)).status, CompactStatus::DoesNotAdmit);
}

TEST(Verdict, Family4OriginIsFamily1) {
    auto origin = build_family(4, Poly(), Poly());
    EXPECT_EQ(origin, build_family(1, Poly(), Poly(Rational(-1, 4))));
}

TEST(CompactnessProperty, ObstructionEqualsSignedTrace) {
    Gen g;
    int checked = 0;
    auto check = [&](const CoframedAlgebra& alg) {
        auto o = stokes_obstructions(alg);
        auto t = coframe_to_brackets(alg);
        for (unsigned j = 1; j <= kDim; ++j) {
            Poly tr = adjoint_trace(t, j);
            ASSERT_EQ(o.lambda[j - 1], j % 2 ? -tr : tr) << j;
            ASSERT_EQ(adjoint_traces(alg)[j - 1], tr);
        }
        ++checked;
    };
    for (int n = 0; n < kCases; ++n) check(g.lie_algebra());
    // Family members inside their ansatz templates, then a random basis change.
    static const int ids[] = {1, 2, 3, 5, 6};
    for (int n = 0; n < kCases; ++n) {
        auto fa = family_assignment(FamilyId(ids[n % 5]), Poly(g.rational(2, 2)), Poly(g.rational(2, 2)));
        auto t = ansatz_template(fa.tag);
        check(change_coframe(instantiate(t, fa.values, {}), g.invertible()));
    }
    EXPECT_GE(checked, 2 * kCases);
}

TEST(CompactnessProperty, VerdictInvariantUnderBasisChange) {
    Gen g;
    for (int n = 0; n < kCases; ++n) {
        auto base = n % 2 ? build_family(1, Poly(), Poly(g.rational())) : build_family(5, Poly(g.rational()), Poly());
        auto changed = change_coframe(base, g.invertible());
        ASSERT_EQ(stokes_obstructions(base).all_zero(), stokes_obstructions(changed).all_zero());
    }
}

TEST(CompactnessProperty, TraceFunctionalTransformsLinearly) {
    Gen g;
    for (int n = 0; n < kCases; ++n) {
        auto alg = g.lie_algebra();
        auto m = g.invertible();
        auto before = adjoint_traces(alg), after = adjoint_traces(change_coframe(alg, m));
        // The dual frame of theta = M w is X = (M^-1)^T e.
        auto n_mat = testing::transpose(linalg::inverse(m));
        for (unsigned i = 0; i < kDim; ++i) {
            Poly expect;
            for (unsigned k = 0; k < kDim; ++k) expect += before[k].scaled(n_mat[i][k]);
            ASSERT_EQ(after[i], expect);
        }
    }
}

TEST(CompactnessProperty, NonzeroObstructionMeansExactVolume) {
    for (auto id : all_families()) {
        auto alg = build_family(id);
        auto o = stokes_obstructions(alg);
        for (unsigned j : o.nonzero())
            EXPECT_EQ(exterior_derivative(omitted_three_form(j), alg), CoframeForm::monomial(o.lambda[j - 1], kVolume));
    }
}

}  // namespace
}  // namespace lagengel
