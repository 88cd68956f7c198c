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

const Poly a = Poly::symbol("a"), b = Poly::symbol("b");

CoframeForm w(unsigned i, unsigned j, const Poly& c = Poly(1)) { return CoframeForm::monomial(c, {i, j}); }

TEST(FamilyId, Validation) {
    EXPECT_THROW(FamilyId(0), Error);
    EXPECT_THROW(FamilyId(7), Error);
    EXPECT_TRUE(FamilyId(4).takes_b());
    EXPECT_FALSE(FamilyId(5).takes_b());
    EXPECT_EQ(FamilyId(6).parameter_names(), (std::vector<std::string>{"a"}));
}

TEST(BuildFamily, Family1) {
    auto f = build_family(1);
    EXPECT_EQ(f.d(1), w(2, 3) + w(1, 3, a));
    EXPECT_EQ(f.d(2), w(3, 4));
    EXPECT_TRUE(f.d(3).is_zero());
    EXPECT_EQ(f.d(4), w(2, 3, b));
}

TEST(BuildFamily, Family3AtZero) {
    auto f = build_family(3, Poly(), b);
    EXPECT_EQ(f.d(1), w(2, 3));
    EXPECT_EQ(f.d(2), w(3, 4));
    EXPECT_TRUE(f.d(3).is_zero());
    EXPECT_EQ(f.d(4), w(2, 3, b.scaled(2)));
}

TEST(BuildFamily, Family5AtZero) {
    auto f = build_family(5, Poly(), Poly());
    EXPECT_EQ(f.d(1), w(1, 3) + w(2, 4));
    EXPECT_EQ(f.d(2), w(3, 4));
    EXPECT_TRUE(f.d(3).is_zero());
    EXPECT_EQ(f.d(4), -w(3, 4));
}

TEST(BuildFamily, NumericOverloadsAgree) {
    EXPECT_EQ(build_family(2, Poly(1), Poly(Rational(-1, 2))),
              build_family(2).substitute(std::map<std::string, Rational>{{"a", 1}, {"b", Rational(-1, 2)}}));
}

TEST(VerifyFamily, AllButFourPass) {
    for (int i : {1, 2, 3, 5, 6}) {
        auto r = verify_family(FamilyId(i));
        EXPECT_TRUE(r.all_pass()) << i;
        EXPECT_EQ(r.flag_ranks, (std::vector<std::size_t>{2, 1, 0}));
    }
    EXPECT_EQ(verify_family(FamilyId(2)).verdict->kind, VerdictKind::Generic);
}

// Frozen values of an independent symbolic expansion of Family 4 as tabulated.
TEST(VerifyFamily, Family4ResidualsAreReportedExactly) {
    auto r = verify_family(FamilyId(4));
    EXPECT_FALSE(r.jacobi_zero);
    const Poly expected = (a * b * b).scaled(Rational(3, 4)) - b * b + a.scaled(Rational(1, 4));
    EXPECT_EQ(r.jacobi[0].component({1, 2, 3}), expected);
    EXPECT_EQ(r.symplectic.d_omega, CoframeForm::monomial(a * b - b, {1, 2, 3}));
    EXPECT_TRUE(r.engel);
    EXPECT_TRUE(r.symplectic.nondegenerate && r.symplectic.lagrangian);
    EXPECT_FALSE(r.symplectic.closed);
}

TEST(VerifyFamily, Family4SpotChecks) {
    auto f4 = build_family(4);
    EXPECT_TRUE(jacobi_holds(f4.substitute(std::map<std::string, Rational>{{"a", 0}, {"b", 0}})));
    auto axis = f4.substitute(std::map<std::string, Poly>{{"b", Poly()}});
    auto res = jacobi_residuals(axis);
    EXPECT_EQ(res[0], CoframeForm::monomial(a.scaled(Rational(1, 4)), {1, 2, 3}));
}

TEST(Ansatz, A3NonzeroTemplateAtOrigin) {
    auto t = a3_nonzero_template();
    EXPECT_EQ(t.tag, AnsatzCase::A3Nonzero);
    auto alg = instantiate(t, {}, {});
    EXPECT_EQ(alg, build_family(1, Poly(), Poly()));
    for (const auto& c : substitute(ansatz_constraints(t), complete_assignment(t, {}))) EXPECT_TRUE(c.value.is_zero());
}

TEST(Ansatz, ConstraintsArePresent) {
    for (auto c : {AnsatzCase::A3Nonzero, AnsatzCase::A3Zero, AnsatzCase::A3ZeroSubcase})
        EXPECT_FALSE(ansatz_constraints(ansatz_template(c)).empty()) << to_string(c);
}

TEST(Ansatz, FamiliesInstantiateTheirTemplates) {
    for (auto id : all_families()) {
        auto fa = family_assignment(id, a, b);
        auto t = ansatz_template(fa.tag);
        EXPECT_EQ(instantiate(t, fa.values, {"a", "b"}), build_family(id)) << id.str();
    }
}

TEST(Ansatz, ConstraintsMatchJacobiResiduals) {
    for (auto id : all_families()) {
        auto fa = family_assignment(id, a, b);
        auto t = ansatz_template(fa.tag);
        auto cs = substitute(ansatz_constraints(t), complete_assignment(t, fa.values));
        auto res = jacobi_residuals(build_family(id));
        std::array<CoframeForm, kDim> rebuilt;
        for (const auto& c : cs) rebuilt[c.form - 1] += CoframeForm::monomial(c.value, c.mask);
        EXPECT_EQ(rebuilt, res) << id.str();
    }
}

TEST(Ansatz, PerturbationBreaksAConstraint) {
    auto t = general_template();
    auto values = general_assignment(build_family(1, Poly(), Poly()));
    values[general_unknown(1, 1, 2)] = Poly(1);
    auto cs = substitute(ansatz_constraints(t), values);
    bool any = false;
    for (const auto& c : cs) any = any || !c.value.is_zero();
    EXPECT_TRUE(any);
}

TEST(Ansatz, SubcaseTemplateObstruction) {
    auto t = a3_zero_subcase_template();
    auto o = stokes_obstructions(t.structure);
    EXPECT_EQ(o.lambda[2], Poly(-2));
}

TEST(FamiliesProperty, GridSatisfiesConstraints) {
    for (int i : {1, 2, 3, 5, 6})
        for (int x = -2; x <= 2; ++x)
            for (int y = -2; y <= 2; ++y) {
                auto fa = family_assignment(FamilyId(i), Poly(x), Poly(y));
                auto t = ansatz_template(fa.tag);
                for (const auto& c : substitute(ansatz_constraints(t), complete_assignment(t, fa.values)))
                    ASSERT_TRUE(c.value.is_zero()) << i << " (" << x << ", " << y << ") " << c.label();
            }
}

TEST(FamiliesProperty, SingleCoefficientPerturbationIsRigid) {
    Gen g;
    static const int ids[] = {1, 2, 3, 5, 6};
    int broken = 0;
    const int trials = 200;
    for (int n = 0; n < trials; ++n) {
        auto fa = family_assignment(FamilyId(ids[g.integer(0, 4)]), Poly(g.integer(-2, 2)), Poly(g.integer(-2, 2)));
        auto t = ansatz_template(fa.tag);
        auto values = complete_assignment(t, fa.values);
        const auto& u = t.unknowns[g.integer(0, int(t.unknowns.size()) - 1)];
        values[u] += Poly(g.coin() ? 1 : -1);
        bool any = false;
        for (const auto& c : substitute(ansatz_constraints(t), values)) any = any || !c.value.is_zero();
        if (any) ++broken;
    }
    EXPECT_GE(broken * 100, 95 * trials) << broken << " of " << trials;
}

}  // namespace
}  // namespace lagengel
