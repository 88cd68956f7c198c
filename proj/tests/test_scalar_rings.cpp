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

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(to_string(Rational(4, 8)), "1/2");
    EXPECT_EQ(to_string(Rational(-5)), "-5");
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("x"), Error);
}

TEST(Poly, Eval) {
    EXPECT_EQ((-(a * a)).eval({{"a", 2}}), Rational(-4));
    EXPECT_EQ(b.scaled(2).eval({{"b", Rational(1, 2)}}), Rational(1));
    EXPECT_EQ((a * a * b - b.scaled(Rational(1, 4))).eval({{"a", 1}, {"b", 4}}), Rational(3));
    EXPECT_THROW((a + b).eval({{"a", 1}}), MissingSymbolError);
}

TEST(Poly, CanonicalPrint) {
    EXPECT_EQ((b + a * a + Poly(1)).str(), "a^2 + b + 1");
    EXPECT_EQ((a - a).str(), "0");
    EXPECT_TRUE((a * b - b * a).is_zero());
}

TEST(Poly, SubstituteAndPartial) {
    Poly p = a * a * b + a.scaled(3);
    EXPECT_EQ(p.substitute(std::map<std::string, Poly>{{"a", b}}), b * b * b + b.scaled(3));
    EXPECT_EQ(p.partial("a"), (a * b).scaled(2) + Poly(3));
    EXPECT_EQ(p.partial("c"), Poly());
}

TEST(PolyProperty, RingAxioms) {
    Gen g;
    const std::vector<std::string> syms{"a", "b", "c"};
    for (int n = 0; n < kCases; ++n) {
        Poly p = g.poly(syms), q = g.poly(syms), r = g.poly(syms);
        ASSERT_EQ((p + q) + r, p + (q + r));
        ASSERT_EQ(p + q, q + p);
        ASSERT_EQ((p * q) * r, p * (q * r));
        ASSERT_EQ(p * q, q * p);
        ASSERT_EQ(p * (q + r), p * q + p * r);
        ASSERT_TRUE((p - p).is_zero());
        ASSERT_EQ(p * Poly(1), p);
    }
}

TEST(PolyProperty, EvalIsHomomorphism) {
    Gen g;
    const std::vector<std::string> syms{"a", "b"};
    for (int n = 0; n < kCases; ++n) {
        Poly p = g.poly(syms, 4, 3), q = g.poly(syms, 4, 3);
        std::map<std::string, Rational> at{{"a", g.rational()}, {"b", g.rational()}};
        ASSERT_EQ((p * q).eval(at), p.eval(at) * q.eval(at));
        ASSERT_EQ((p + q).eval(at), p.eval(at) + q.eval(at));
    }
}

TEST(PolyProperty, PartialIsDerivation) {
    Gen g;
    const std::vector<std::string> syms{"a", "b"};
    for (int n = 0; n < kCases; ++n) {
        Poly p = g.poly(syms, 4, 3), q = g.poly(syms, 4, 3);
        ASSERT_EQ((p * q).partial("a"), p.partial("a") * q + p * q.partial("a"));
    }
}

TEST(QuadExt, Inverse) {
    QuadExt c(Rational(3, 2), Rational(1, 2), 5);
    EXPECT_EQ(c.inverse(), QuadExt(Rational(3, 2), Rational(-1, 2), 5));
    EXPECT_EQ(QuadExt::rational(1, 5).inverse(), QuadExt::rational(1, 5));
    EXPECT_EQ(QuadExt::sqrt_of(5).inverse(), QuadExt(0, Rational(1, 5), 5));
    EXPECT_THROW(QuadExt::rational(0, 5).inverse(), DivisionByZeroError);
}

TEST(QuadExt, RadicandNormalization) {
    EXPECT_EQ(QuadExt(0, 1, 20), QuadExt(0, 2, 5));
    EXPECT_EQ(QuadExt(0, 1, 20).field(), Integer(5));
    EXPECT_THROW(QuadExt(0, 1, 9), Error);
    EXPECT_THROW(QuadExt(0, 1, 1), Error);
    EXPECT_THROW(QuadExt::sqrt_of(5) + QuadExt::sqrt_of(2), Error);
}

TEST(QuadExt, SignAndPrint) {
    QuadExt s5 = QuadExt::sqrt_of(5);
    EXPECT_GT(s5, QuadExt::rational(2, 5));
    EXPECT_LT(s5, QuadExt::rational(3, 5));
    EXPECT_EQ(QuadExt(Rational(1, 2), Rational(-1, 2), 5).sign(), -1);
    EXPECT_EQ(s5 * s5, QuadExt::rational(5, 5));
    EXPECT_EQ(QuadExt(Rational(3, 2), Rational(1, 2), 5).str(), "3/2 + 1/2*sqrt(5)");
    EXPECT_EQ(QuadExt(0, Rational(-1, 5), 5).str(), "-1/5*sqrt(5)");
}

TEST(QuadExtProperty, InverseIsExact) {
    Gen g;
    const int fields[] = {2, 3, 5, 7};
    for (int n = 0; n < kCases; ++n) {
        const int d = fields[n % 4];
        QuadExt q(g.rational(), g.rational(), d);
        if (q.is_zero()) q = QuadExt::sqrt_of(d);
        ASSERT_EQ(q * quad_inverse(q), QuadExt::rational(1, d));
        ASSERT_EQ(q.norm(), (q * q.conjugate()).x());
    }
}

DiffRing exp_trig_ring() {
    DiffRing ring;
    for (const char* c : {"x", "y", "u", "v"}) ring.add_coordinate(c);
    ring.add_constant("beta");
    ring.add_generator("E").add_generator("C").add_generator("S").add_trig_pair("C", "S");
    ring.set_derivative("E", "y", Poly::symbol("beta") * Poly::symbol("E"));
    ring.set_derivative("C", "y", -(Poly::symbol("beta") * Poly::symbol("S")));
    ring.set_derivative("S", "y", Poly::symbol("beta") * Poly::symbol("C"));
    return ring;
}

TEST(DiffRing, Derivatives) {
    auto ring = std::make_shared<const DiffRing>(exp_trig_ring());
    auto s = [&](const Poly& p) { return DiffScalar(ring, p); };
    const Poly x = Poly::symbol("x"), y = Poly::symbol("y"), e = Poly::symbol("E");
    const Poly c = Poly::symbol("C"), sn = Poly::symbol("S"), beta = Poly::symbol("beta");
    EXPECT_EQ(diff_derive(s(x * y), "x"), s(y));
    EXPECT_EQ(diff_derive(s(e), "y"), s(beta * e));
    EXPECT_TRUE(diff_derive(s(c * c + sn * sn), "y").is_zero());
    EXPECT_EQ(s(c * c + sn * sn), s(Poly(1)));
    EXPECT_THROW(diff_derive(s(x), "beta"), UnknownSymbolError);
    EXPECT_THROW(s(Poly::symbol("q")), UnknownSymbolError);
}

TEST(DiffRing, DeclarationErrors) {
    DiffRing ring;
    ring.add_coordinate("x");
    EXPECT_THROW(ring.add_coordinate("x"), Error);
    EXPECT_THROW(ring.set_derivative("G", "x", Poly(1)), UnknownSymbolError);
    ring.add_generator("G");
    EXPECT_THROW(ring.set_derivative("G", "z", Poly(1)), UnknownSymbolError);
    ring.set_derivative("G", "x", Poly::symbol("H"));
    EXPECT_THROW(ring.validate(), Error);
}

TEST(DiffRingProperty, MixedPartialsCommute) {
    DiffRing ring;
    for (const char* c : {"x", "y", "u", "v"}) ring.add_coordinate(c);
    ring.add_generator("E").add_generator("F").add_inverse_pair("E", "F");
    ring.add_generator("C").add_generator("S").add_trig_pair("C", "S");
    ring.set_derivative("E", "y", Poly::symbol("E")).set_derivative("F", "y", -Poly::symbol("F"));
    ring.set_derivative("C", "x", -Poly::symbol("S")).set_derivative("S", "x", Poly::symbol("C"));
    auto rp = std::make_shared<const DiffRing>(ring);
    Gen g;
    const std::vector<std::string> syms{"x", "y", "u", "E", "F", "C", "S"};
    const std::vector<std::string> coords{"x", "y", "u", "v"};
    for (int n = 0; n < kCases; ++n) {
        DiffScalar s(rp, g.poly(syms, 4, 3));
        const auto& p = coords[g.integer(0, 3)];
        const auto& q = coords[g.integer(0, 3)];
        ASSERT_EQ(s.derive(p).derive(q), s.derive(q).derive(p)) << s.str();
    }
}

}  // namespace
}  // namespace lagengel
