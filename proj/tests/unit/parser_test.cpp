/*
   Copyright 2026 The shiftalg Authors

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

#include "shiftalg/errors.hpp"
#include "shiftalg/expr_parser.hpp"

namespace shiftalg {
namespace {

using GR = GaussianRational;
using F = Functional;

TEST(ParseFunctionTest, Examples) {
    EXPECT_EQ(parse_function("(1-z)^2"), (Poly{1, -2, 1}));
    EXPECT_EQ(parse_function("1/2*z+1"), (Poly{1, GR(1, 2)}));
    EXPECT_EQ(parse_function("(1-z)*(1-1/2*z)"), (Poly{1, GR(-3, 2), GR(1, 2)}));
}

TEST(ParseFunctionTest, UnarySignsAndComplex) {
    EXPECT_EQ(parse_function("-z"), (Poly{0, -1}));
    EXPECT_EQ(parse_function("--z"), (Poly{0, 1}));
    EXPECT_EQ(parse_function("-z^2"), (Poly{0, 0, -1}));
    EXPECT_EQ(parse_function("(1+i)*z"), (Poly{0, GR(1) + GR::i()}));
    EXPECT_EQ(parse_function("i^2"), Poly(-1));
    EXPECT_EQ(parse_function(" 3 * ( z + 1 ) ^ 0 "), Poly(3));
}

TEST(ParseFunctionTest, ErrorOffsets) {
    auto offset = [](const char* s) {
        try {
            parse_function(s);
        } catch (const SyntaxError& e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    EXPECT_EQ(offset("1+"), 2);
    EXPECT_EQ(offset("(1-z"), 4);
    EXPECT_EQ(offset("1 $ z"), 2);
    EXPECT_EQ(offset("z^x"), 2);
    EXPECT_EQ(offset("1/0"), 2);
    EXPECT_EQ(offset(""), 0);
    EXPECT_EQ(offset("z z"), 2);
}

TEST(ParseFunctionTest, RoundTripThroughStr) {
    for (const char* s : {"(1-z)^3", "1/3*z^5 - 2*z + 7/2", "(2+i)*z^2 - i", "0", "z*(z-1)*(z-2)*(z-3)"}) {
        const Poly p = parse_function(s);
        EXPECT_EQ(parse_function(p.str()), p) << s;
    }
}

TEST(ParseFunctionalTest, Examples) {
    EXPECT_EQ(parse_functional("delta(1,0)"), F::delta(1, 0));
    const F two = parse_functional("delta(0,1)+delta(0,0)");
    EXPECT_EQ(two.atoms().size(), 2u);
    EXPECT_EQ(two, F::delta(0, 1) + F::delta(0, 0));
    const F a = parse_functional("2*delta(1/2,3)");
    ASSERT_EQ(a.atoms().size(), 1u);
    EXPECT_EQ(a.atoms()[0].point, GR(1, 2));
    EXPECT_EQ(a.atoms()[0].order, 3u);
    EXPECT_EQ(a.atoms()[0].coeff, GR(2));
}

TEST(ParseFunctionalTest, ComplexAndSigns) {
    EXPECT_EQ(parse_functional("-(1+1*i)*delta(1/2+1*i,1) - delta(0,0)"),
              F::delta(GR(1, 2) + GR::i(), 1, -(GR(1) + GR::i())) - F::delta(0, 0));
    EXPECT_EQ(parse_functional("0"), F());
}

TEST(ParseFunctionalTest, StrRoundTrip) {
    const F phi = F::delta(GR::i(), 2, GR(-3, 4)) + F::delta(2, 0) + F::delta(0, 1, GR(1) + GR::i());
    EXPECT_EQ(parse_functional(phi.str()), phi);
}

TEST(ParseFunctionalTest, Errors) {
    EXPECT_THROW(parse_functional(""), SyntaxError);
    EXPECT_THROW(parse_functional("delta(1)"), SyntaxError);
    EXPECT_THROW(parse_functional("delta(1,0)delta(0,0)"), SyntaxError);
    EXPECT_THROW(parse_functional("eps(1,0)"), SyntaxError);
    EXPECT_THROW(parse_functional("delta(x,0)"), SyntaxError);
    EXPECT_THROW(parse_functional("2 delta(1,0)"), SyntaxError);
}

TEST(ParseFactorsTest, Forms) {
    EXPECT_EQ(parse_factors(""), FactoredPoly());
    EXPECT_EQ(parse_factors("1"), FactoredPoly({{1, 1}}));
    EXPECT_EQ(parse_factors("1:2,1/2"), FactoredPoly({{1, 2}, {GR(1, 2), 1}}));
    EXPECT_EQ(parse_factors("i:1, -1"), FactoredPoly({{GR::i(), 1}, {-1, 1}}));
    EXPECT_THROW(parse_factors("1:0"), SyntaxError);
    EXPECT_THROW(parse_factors("1,,2"), SyntaxError);
    EXPECT_THROW(parse_factors("0"), ZeroRoot);
}

}  // namespace
}  // namespace shiftalg
