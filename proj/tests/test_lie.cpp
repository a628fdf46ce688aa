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

#include "onsager/lie.hpp"
#include "test_support.hpp"

using namespace onsager;

namespace {

LieElement xp(int j) { return generator(Kind::XPlus, j); }
LieElement xm(int l) { return generator(Kind::XMinus, l); }
LieElement h(int k) { return generator(Kind::H, k); }

}  // namespace

TEST(Scalar, LowestTermsAndParsing) {
    EXPECT_EQ(to_string(parse_scalar("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_scalar("-3/2")), "-3/2");
    EXPECT_EQ(to_string(parse_scalar("+7")), "7");
    EXPECT_THROW(parse_scalar("1/0"), DomainError);
    EXPECT_THROW(parse_scalar("1.5"), DomainError);
    EXPECT_THROW(parse_scalar("/3"), DomainError);
    EXPECT_EQ(binomial(6, 3), 20);
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(factorial(5), 120);
}

TEST(Generator, Normalization) {
    EXPECT_EQ(h(-3), h(3));
    EXPECT_EQ(xp(-2), -xp(2));
    EXPECT_EQ(xm(-4), -xm(4));
    EXPECT_TRUE(xp(0).is_zero());
    EXPECT_TRUE(xm(0).is_zero());
    EXPECT_EQ(h(0).size(), 1u);
}

TEST(Bracket, StructureConstants) {
    EXPECT_EQ(bracket(xp(2), xm(1)), h(3) - h(1));
    EXPECT_EQ(bracket(h(1), xp(1)), xp(2) * Scalar(2));
    EXPECT_EQ(bracket(xm(1), xp(1)), h(0) - h(2));
    EXPECT_EQ(bracket(h(2), xm(1)), (xm(3) - xm(1)) * Scalar(-2));
    EXPECT_TRUE(bracket(xp(2), xp(5)).is_zero());
    EXPECT_TRUE(bracket(h(2), h(5)).is_zero());
    EXPECT_TRUE(bracket(xp(3), xm(3)).coefficient(BasisElement::h(0)) == -1);
}

TEST(Bracket, OrderIsKindThenIndex) {
    EXPECT_LT(BasisElement::x_minus(9), BasisElement::h(0));
    EXPECT_LT(BasisElement::h(9), BasisElement::x_plus(1));
    EXPECT_LT(BasisElement::x_plus(1), BasisElement::x_plus(2));
    EXPECT_EQ(compare(BasisElement::h(2), BasisElement::h(2)), std::strong_ordering::equal);
}

TEST(Bracket, AntisymmetryProperty) {
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        LieElement a = test::random_lie(rng, 8), b = test::random_lie(rng, 8);
        EXPECT_EQ(bracket(a, b), -bracket(b, a));
        EXPECT_TRUE(bracket(a, a).is_zero());
    }
}

TEST(Bracket, JacobiProperty) {
    std::mt19937 rng(12);
    for (int i = 0; i < 500; ++i) {
        LieElement a = test::random_lie(rng, 8), b = test::random_lie(rng, 8), c = test::random_lie(rng, 8);
        LieElement s = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
        ASSERT_TRUE(s.is_zero()) << to_string(a) << " | " << to_string(b) << " | " << to_string(c);
    }
}

TEST(Tau, InvolutiveAutomorphism) {
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        LieElement a = test::random_lie(rng, 6), b = test::random_lie(rng, 6);
        EXPECT_EQ(tau(tau(a)), a);
        EXPECT_EQ(tau(bracket(a, b)), bracket(tau(a), tau(b)));
    }
    EXPECT_EQ(tau(xp(2) + h(1)), xm(2) - h(1));
}

TEST(Printing, DescendingOrder) {
    EXPECT_EQ(to_string(h(3) - h(1)), "h(3) - h(1)");
    EXPECT_EQ(to_string(xp(1) * Scalar(1, 2) - xm(2)), "1/2*xp(1) - xm(2)");
    EXPECT_EQ(to_string(LieElement{}), "0");
}

TEST(Fault, PerturbsOnlyOneConstant) {
    {
        fault::ScopedStructureConstantFault f;
        EXPECT_EQ(bracket(xp(1), xm(1)), h(2));
        EXPECT_EQ(bracket(xp(2), xm(1)), h(3) - h(1));
    }
    EXPECT_EQ(bracket(xp(1), xm(1)), h(2) - h(0));
}
