/*
   Copyright 2026 The onsager-kernel authors

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

#include "onsager/elements.hpp"

using namespace onsager;

namespace {

LieElement xp(int j) { return generator(Kind::XPlus, j); }
LieElement xm(int l) { return generator(Kind::XMinus, l); }
LieElement h(int k) { return generator(Kind::H, k); }
UEAElement U(const LieElement& a) { return from_lie(a); }
UEAElement mul(const UEAElement& a, const UEAElement& b) { return ordered_product(a, b); }

}  // namespace

TEST(PElements, Examples) {
    EXPECT_EQ(p_def(1, 3, 1), h(4) - h(2));
    EXPECT_EQ(p_def(2, 1, 1), h(4) - h(2) * Scalar(4) + h(0) * Scalar(3));
    EXPECT_EQ(p_def(1, 2, 2), h(4) - h(0));
    EXPECT_EQ(p_closed(2, 1, 1), p_def(2, 1, 1));
    EXPECT_EQ(p_closed(1, 3, 5), h(8) - h(2));
}

TEST(PElements, DualPathAndSymmetry) {
    for (int u = 1; u <= 6; ++u)
        for (int j = 1; j <= 4; ++j)
            for (int l = 1; l <= 4; ++l) {
                ASSERT_EQ(p_def(u, j, l), p_closed(u, j, l)) << u << " " << j << " " << l;
                EXPECT_EQ(p_closed(u, j, l), p_closed(u, l, j));
            }
}

TEST(D1, Examples) {
    EXPECT_EQ(d1_rec(Sign::Plus, 0, 2, 5), xp(2));
    EXPECT_EQ(d1_rec(Sign::Minus, 0, 2, 5), xm(5));
    EXPECT_EQ(d1_rec(Sign::Plus, 1, 1, 1), xp(3) - xp(1) * Scalar(3));
    EXPECT_EQ(d1_rec(Sign::Minus, 1, 1, 1), xm(3) - xm(1) * Scalar(3));
    EXPECT_EQ(d1_closed(Sign::Plus, 1, 3, 2), xp(8) - xp(2) * Scalar(2) - xp(4));
    EXPECT_EQ(d1_closed(Sign::Minus, 0, 3, 2), xm(2));
}

TEST(D1, DualPathAndTauTransport) {
    for (int u = 0; u <= 6; ++u)
        for (int j = 1; j <= 4; ++j)
            for (int l = 1; l <= 4; ++l) {
                for (Sign s : {Sign::Plus, Sign::Minus})
                    ASSERT_EQ(d1_rec(s, u, j, l), d1_closed(s, u, j, l)) << u << " " << j << " " << l;
                EXPECT_EQ(tau(d1_closed(Sign::Plus, u, j, l)), d1_closed(Sign::Minus, u, l, j));
            }
}

TEST(BracketXLambda1, MatchesLieBracket) {
    EXPECT_EQ(bracket_x_lambda1(2, 1, 1), xp(4) * Scalar(2) - xp(2) * Scalar(4));
    for (int k = 1; k <= 4; ++k)
        for (int j = 1; j <= 4; ++j)
            for (int l = 1; l <= 4; ++l) {
                EXPECT_EQ(bracket_x_lambda1(k, j, l), bracket(xp(k), lambda1(j, l)));
                if (k == j) EXPECT_EQ(bracket_x_lambda1(j, j, l), d1_rec(Sign::Plus, 1, j, l) * Scalar(2));
            }
}

TEST(Lambda, BaseCases) {
    EXPECT_EQ(lambda_rec(2, 3, 0), unit());
    EXPECT_TRUE(lambda_rec(2, 3, -1).is_zero());
    EXPECT_EQ(lambda_rec(2, 3, 1), U(h(1) - h(5)));
    EXPECT_TRUE(lambda1(0, 4).is_zero());
    EXPECT_EQ(lambda1(-1, 2), h(3) - h(1));
    EXPECT_THROW(lambda_rec(1, 0, 2), DomainError);
}

TEST(Lambda, FrozenOrderTwo) {
    // 1/2 h2^2 - h0 h2 + 1/2 h0^2 - 1/2 h4 + 2 h2 - 3/2 h0
    UEAElement h0 = U(h(0)), h2 = U(h(2)), h4 = U(h(4));
    UEAElement expected = mul(h2, h2) * rational(1, 2) - mul(h0, h2) + mul(h0, h0) * rational(1, 2) -
                          h4 * rational(1, 2) + h2 * Scalar(2) - h0 * rational(3, 2);
    EXPECT_EQ(lambda_rec(1, 1, 2), expected);
}

TEST(Lambda, SeriesAgreesWithRecursion) {
    EXPECT_EQ(lambda_series(1, 1, 1), U(h(0) - h(2)));
    for (int k = 0; k <= 6; ++k)
        for (int j = 1; j <= 3; ++j)
            for (int l = 1; l <= 3; ++l) ASSERT_EQ(lambda_series(j, l, k), lambda_rec(j, l, k)) << j << l << k;
}

TEST(Lambda, TopDegreeIsDividedPowerOfMinusP1) {
    for (int k = 1; k <= 4; ++k)
        for (int j = 1; j <= 3; ++j)
            for (int l = 1; l <= 3; ++l) {
                UEAElement lam = lambda_rec(j, l, k);
                EXPECT_EQ(degree(lam), k);
                EXPECT_EQ(top_degree_part(lam), top_degree_part(divided_power(U(-p_def(1, j, l)), k)));
            }
}

TEST(Duv, Examples) {
    EXPECT_EQ(duv(Sign::Plus, 0, 3, 2, 1), divided_power(U(xp(2)), 3));
    EXPECT_EQ(duv(Sign::Plus, 2, 0, 2, 1), UEAElement{});
    EXPECT_EQ(duv(Sign::Plus, 0, 0, 2, 1), unit());
    EXPECT_TRUE(duv(Sign::Plus, 1, -1, 2, 1).is_zero());
    UEAElement x1 = U(xp(1)), x3 = U(xp(3));
    EXPECT_EQ(duv(Sign::Plus, 1, 2, 1, 1), mul(x1, x3) - mul(x1, x1) * Scalar(3));
}

TEST(Duv, MethodsAgree) {
    for (Sign s : {Sign::Plus, Sign::Minus})
        for (int u = 0; u <= 6; ++u)
            for (int v = 0; u + v <= 6; ++v)
                for (int j = 1; j <= 3; ++j)
                    for (int l = 1; l <= 3; ++l) {
                        UEAElement r = duv(s, u, v, j, l, DuvMethod::Recursion);
                        ASSERT_EQ(r, duv(s, u, v, j, l, DuvMethod::Multinomial)) << u << v << j << l;
                        ASSERT_EQ(r, duv(s, u, v, j, l, DuvMethod::Series)) << u << v << j << l;
                    }
}

TEST(Duv, VOneIsD1) {
    for (int u = 0; u <= 4; ++u) EXPECT_EQ(duv(Sign::Minus, u, 1, 2, 1), U(d1_rec(Sign::Minus, u, 2, 1)));
}

TEST(DTriple, Examples) {
    EXPECT_EQ(d_triple(Sign::Plus, 0, 4, 1, 2), xp(4));
    EXPECT_EQ(d_triple(Sign::Plus, 1, 1, 1, 1), xp(3) - xp(1) * Scalar(3));
    EXPECT_EQ(d_triple(Sign::Plus, 1, 5, 2, 1), xp(8) - xp(6) - xp(4) + xp(2));
    EXPECT_EQ(d_triple(Sign::Minus, 1, 1, 1, 1), xm(3) - xm(1) * Scalar(3));
}

TEST(Properties, PNewD) {
    for (int u = 0; u <= 5; ++u)
        for (int k = 0; k + u <= 5; ++k)
            for (int j = 1; j <= 3; ++j)
                for (int l = 1; l <= 3; ++l)
                    ASSERT_EQ(bracket(d1_rec(Sign::Plus, u, j, l), d1_rec(Sign::Minus, k, j, l)),
                              p_closed(k + u + 1, j, l));
}

TEST(Properties, BracketXP) {
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                for (int m = 1; m <= 3; ++m) {
                    ASSERT_EQ(bracket(xp(j), p_closed(i, k, m)), d_triple(Sign::Plus, i, j, k, m) * Scalar(-2));
                    ASSERT_EQ(bracket(xm(j), p_closed(i, k, m)), d_triple(Sign::Minus, i, j, k, m) * Scalar(2));
                }
}

TEST(Properties, BracketPD) {
    for (int m = 1; m <= 5; ++m)
        for (int u = 0; m + u <= 5; ++u)
            for (int j = 1; j <= 3; ++j)
                for (int l = 1; l <= 3; ++l)
                    ASSERT_EQ(bracket(p_closed(m, j, l), d1_rec(Sign::Plus, u, j, l)),
                              d1_rec(Sign::Plus, m + u, j, l) * Scalar(2));
}

TEST(Properties, DegreeOneElements) {
    for (int u = 0; u <= 4; ++u) {
        EXPECT_EQ(degree(U(d1_rec(Sign::Plus, u, 2, 1))), 1);
        EXPECT_EQ(degree(U(d_triple(Sign::Minus, u, 2, 1, 3))), 1);
    }
}
