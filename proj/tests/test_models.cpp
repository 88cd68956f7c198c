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

TEST(Models, NormalFormCheck) {
    auto r = normal_form_check();
    EXPECT_EQ(r.engel_flag, (std::vector<std::size_t>{2, 1, 0}));
    EXPECT_TRUE(r.nil.holds);
    EXPECT_TRUE(r.sol.holds);
    EXPECT_TRUE(r.osc.holds);
    EXPECT_TRUE(r.all());
}

TEST(Models, WrongSignFails) {
    auto model = sol_chart_model();
    const Poly beta = Poly::symbol("beta");
    model.parameter_values["b"] = beta * beta;
    auto r = check_realization(model, build_family(1));
    EXPECT_TRUE(r.independent);
    EXPECT_FALSE(r.holds);
}

TEST(Models, NilModelIsNotFamily1WithA) {
    auto model = nil_chart_model();
    model.parameter_values["a"] = Poly(1);
    EXPECT_FALSE(check_realization(model, build_family(1)).holds);
}

TEST(Models, DependentCoframeIsRejected) {
    auto model = nil_chart_model();
    model.coframe[3] = model.coframe[2];
    auto r = check_realization(model, build_family(1));
    EXPECT_FALSE(r.independent);
    EXPECT_FALSE(r.holds);
}

}  // namespace
}  // namespace lagengel
