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

#include <random>

#include "oracles.hpp"
#include "shiftalg/errors.hpp"
#include "shiftalg/poly.hpp"

namespace shiftalg {
namespace {

using GR = GaussianRational;

TEST(PolyTest, RingIdentity) { EXPECT_EQ((Poly{1, -1} * Poly{1, 1}), (Poly{1, 0, -1})); }

TEST(PolyTest, Derivative) {
    EXPECT_EQ((Poly{1, -2, 1}.derivative()), (Poly{-2, 2}));
    EXPECT_EQ((Poly{1, -2, 1}.derivative(2)), Poly(2));
    EXPECT_EQ((Poly{1, -2, 1}.derivative(3)), Poly());
}

TEST(PolyTest, Evaluate) {
    EXPECT_EQ((Poly{1, -1})(1), GR(0));
    EXPECT_EQ((Poly{1, 2, 3})(GR::i()), GR(-2) + GR(2) * GR::i());
}

TEST(PolyTest, TrimmedAndDegree) {
    EXPECT_EQ(Poly(std::vector<GR>{1, 0, 0}), Poly(1));
    EXPECT_EQ(Poly().degree(), -1);
    EXPECT_EQ((Poly{0, 0, 5}).degree(), 2);
    EXPECT_EQ((Poly{1, 1} - Poly{1, 1}), Poly());
}

TEST(PolyTest, ExactDivisionByRoot) {
    EXPECT_EQ(exact_div(Poly{-1, 0, 1}, GR(1)), (Poly{1, 1}));
    EXPECT_THROW(exact_div(Poly{0, 0, 1}, GR(1)), NonzeroRemainder);
}

TEST(PolyTest, ExactDivisionByPoly) {
    EXPECT_EQ(exact_div(Poly{1, -2, 1}, Poly{1, -1}), (Poly{1, -1}));
    EXPECT_THROW(exact_div(Poly{0, 0, 1}, Poly{-1, 1}), NonzeroRemainder);
}

TEST(PolyTest, DivmodReconstructs) {
    std::mt19937 rng(3);
    for (int k = 0; k < 50; ++k) {
        const Poly a = oracle::random_poly(rng, 7);
        Poly b = oracle::random_poly(rng, 3);
        if (b.is_zero()) b = Poly(1);
        const auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree() == 0 ? 0 : b.degree());
    }
}

TEST(PolyTest, TaylorShiftMatchesDerivatives) {
    const Poly p{3, -1, 0, 2};
    const GR c(1, 2);
    const Poly s = p.taylor_shift(c);
    for (unsigned k = 0; k <= 3; ++k) EXPECT_EQ(s.coeff(k) * oracle::fact(k), p.derivative(k)(c));
}

TEST(PolyTest, ShiftedUpAndPow) {
    EXPECT_EQ((Poly{1, 1}.shifted_up(2)), (Poly{0, 0, 1, 1}));
    EXPECT_EQ((Poly{1, -1}.pow(2)), (Poly{1, -2, 1}));
    EXPECT_EQ((Poly{1, -1}.pow(0)), Poly(1));
}

TEST(PolyTest, Padded) {
    EXPECT_EQ((Poly{1, 2}.padded(4)), (std::vector<GR>{1, 2, 0, 0}));
    EXPECT_THROW((Poly{1, 2, 3}.padded(2)), InvalidArgument);
}

TEST(PolyTest, Str) {
    EXPECT_EQ(Poly().str(), "0");
    EXPECT_EQ((Poly{1, GR(-3, 2), GR(1, 2)}).str(), "1 - 3/2*z + 1/2*z^2");
    EXPECT_EQ((Poly{0, GR(1) + GR::i()}).str(), "(1+1*i)*z");
}

TEST(PolyTest, RingLawsOnRandomPolys) {
    std::mt19937 rng(17);
    for (int k = 0; k < 40; ++k) {
        const Poly a = oracle::random_poly(rng, 5), b = oracle::random_poly(rng, 5), c = oracle::random_poly(rng, 5);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b).derivative(), a.derivative() * b + a * b.derivative());
        EXPECT_EQ(a * b, b * a);
    }
}

}  // namespace
}  // namespace shiftalg
