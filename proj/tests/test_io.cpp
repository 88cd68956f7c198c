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

#include "lagengel/report.hpp"
#include "test_support.hpp"

namespace lagengel {
namespace {

using testing::Gen;
using testing::kCases;

const char* kFamily1 = "params: a b\ndw1 = w2^w3 + a*w1^w3\ndw2 = w3^w4\ndw3 = 0\ndw4 = b*w2^w3\n";

std::string zero_rest(const std::string& first) { return first + "\ndw2 = 0\ndw3 = 0\ndw4 = 0\n"; }

template <class F>
ParseError parse_error_of(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "expected a ParseError";
    return ParseError("none", 0, 0);
}

TEST(Parser, Family1) { EXPECT_EQ(parse_coframe(kFamily1), build_family(1)); }

TEST(Parser, IndexNormalization) {
    auto alg = parse_coframe(zero_rest("dw1 = w3^w2"));
    EXPECT_EQ(alg.d(1), CoframeForm::monomial(Poly(-1), {2, 3}));
}

TEST(Parser, AlternationLint) {
    auto doc = parse_document(zero_rest("dw1 = w2^w2"));
    EXPECT_TRUE(doc.algebra.d(1).is_zero());
    ASSERT_EQ(doc.warnings.size(), 1u);
}

TEST(Parser, Syntax) {
    auto alg = parse_coframe(
        "# comment\nparams: a\ndw1 = (a^2 - 1/4)*w1^w3 − w2^w4 / 2\ndw2 = 2*a*(w1^w2 + w3^w4)\ndw3 = 0\ndw4 = 0\n");
    const Poly a = Poly::symbol("a");
    EXPECT_EQ(alg.coefficient(1, 1, 3), a * a - Poly(Rational(1, 4)));
    EXPECT_EQ(alg.coefficient(1, 2, 4), Poly(Rational(-1, 2)));
    EXPECT_EQ(alg.coefficient(2, 3, 4), a.scaled(2));
}

TEST(Parser, Errors) {
    auto dup = parse_error_of([] { parse_coframe("dw1 = 0\ndw2 = 0\ndw1 = w1^w2\ndw3 = 0\ndw4 = 0\n"); });
    EXPECT_EQ(dup.line(), 3u);
    EXPECT_NE(std::string(dup.what()).find("duplicate"), std::string::npos);

    auto missing = parse_error_of([] { parse_coframe("dw1 = 0\ndw2 = 0\ndw3 = 0\n"); });
    EXPECT_NE(std::string(missing.what()).find("dw4"), std::string::npos);

    EXPECT_THROW(parse_coframe(zero_rest("dw1 = c*w1^w2")), UndeclaredSymbolError);
    auto undeclared = parse_error_of([] { parse_coframe("params: a\n" + zero_rest("dw1 = a*w1^w2 + c*w1^w3")); });
    EXPECT_EQ(undeclared.line(), 2u);
    EXPECT_EQ(undeclared.column(), 17u);

    EXPECT_THROW(parse_coframe(zero_rest("dw1 = w1")), ParseError);
    EXPECT_THROW(parse_coframe(zero_rest("dw1 = w1^w2 +")), ParseError);
    EXPECT_THROW(parse_coframe(zero_rest("dw1 = w5^w2")), ParseError);
    EXPECT_THROW(parse_coframe(zero_rest("hello")), ParseError);
    EXPECT_THROW(parse_coframe(zero_rest("dw1 = w1^w2 / 0")), Error);
}

TEST(Parser, ChartDocument) {
    const std::string text = std::string(kFamily1) +
                             "chart: x y u v\n"
                             "let a = 0\nlet b = 0\n"
                             "w1 := u*dy + dv\nw2 := du - x*dy\nw3 := dy\nw4 := dx\n";
    auto doc = parse_document(text);
    ASSERT_TRUE(doc.realization);
    EXPECT_TRUE(check_realization(*doc.realization, doc.algebra).holds);
    EXPECT_THROW(parse_document(std::string(kFamily1) + "w1 := dx\n"), ParseError);
    EXPECT_THROW(parse_document(std::string(kFamily1) + "chart: x y u v\nw1 := dx\n"), ParseError);
}

TEST(ParserProperty, RoundTrip) {
    for (auto id : all_families()) EXPECT_EQ(parse_coframe(emit_coframe(build_family(id))), build_family(id));
    Gen g;
    for (int n = 0; n < kCases; ++n) {
        std::array<CoframeForm, kDim> d;
        for (auto& f : d) f = g.form(2);
        CoframedAlgebra alg({"a", "b"}, d);
        const auto text = emit_coframe(alg);
        ASSERT_EQ(parse_coframe(text), alg) << text;
        ASSERT_EQ(emit_coframe(parse_coframe(text)), text);
    }
}

TEST(Report, Empty) {
    Report r;
    EXPECT_EQ(emit_report(r, ReportFormat::Json), "{}");
    EXPECT_EQ(emit_report(r, ReportFormat::Table), "");
}

TEST(Report, SixFamilyTable) {
    Report r;
    for (auto id : all_families()) r.families.push_back(family_entry(id));
    const auto table = emit_report(r, ReportFormat::Table);
    std::istringstream in(table);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    ASSERT_EQ(lines.size(), 8u);
    EXPECT_NE(lines[0].find("Compact?"), std::string::npos);
    EXPECT_NE(lines[2].find("yes if a = 0"), std::string::npos);
    EXPECT_NE(lines[5].find("FAIL"), std::string::npos);
    EXPECT_EQ(lines[7].substr(lines[7].rfind('|') + 2), "no");
    EXPECT_FALSE(report_passes(r));
}

TEST(Report, NilpotentLatticeBlock) {
    Report r;
    r.families.push_back(family_entry(FamilyId(1), Poly(), Poly()));
    auto j = nlohmann::json::parse(emit_report(r, ReportFormat::Json));
    const auto& lat = j["families"][0]["lattice"];
    EXPECT_TRUE(lat["malcev"]["lattice_exists"].get<bool>());
    EXPECT_EQ(lat["gamma"]["generators"].size(), 4u);
    EXPECT_TRUE(report_passes(r));
}

TEST(Report, ExactScalars) {
    Report r;
    r.families.push_back(family_entry(FamilyId(3), Poly(Rational(1, 3)), Poly(-2)));
    r.sl2z = sl2z_lattice({{{2, 1}, {1, 1}}});
    auto j = nlohmann::json::parse(emit_report(r, ReportFormat::Json));
    EXPECT_EQ(j["families"][0]["parameters"]["a"], "1/3");
    EXPECT_EQ(j["families"][0]["obstructions"]["w1^w2^w3"], "-1/18");
    EXPECT_EQ(j["sl2z"]["c"]["x"], "3/2");
    EXPECT_EQ(j["sl2z"]["c"]["y"], "1/2");
    EXPECT_EQ(j["sl2z"]["c"]["D"], "5");
}

TEST(Report, Deterministic) {
    auto build = [] {
        Report r;
        for (auto id : all_families()) r.families.push_back(family_entry(id));
        r.documents.push_back(document_entry("f1", parse_document(kFamily1)));
        r.sl2z = sl2z_lattice({{{3, 2}, {1, 1}}});
        r.normal_form = normal_form_check();
        return r;
    };
    EXPECT_EQ(emit_report(build(), ReportFormat::Json), emit_report(build(), ReportFormat::Json));
    EXPECT_EQ(emit_report(build(), ReportFormat::Table), emit_report(build(), ReportFormat::Table));
}

}  // namespace
}  // namespace lagengel
