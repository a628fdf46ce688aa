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

#include "onsager/uea.hpp"
#include "test_support.hpp"

using namespace onsager;

namespace {

UEAElement xp(int j) { return from_generator(Kind::XPlus, j); }
UEAElement xm(int l) { return from_generator(Kind::XMinus, l); }
UEAElement h(int k) { return from_generator(Kind::H, k); }

UEAElement word_element(const Word& w) { return UEAElement(w); }

}  // namespace

TEST(Multiply, ConcatenatesWithoutReordering) {
    UEAElement m = multiply(xp(1), xm(1));
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m.begin()->first, (Word{BasisElement::x_plus(1), BasisElement::x_minus(1)}));
}

TEST(NormalForm, BasicCommutator) {
    UEAElement nf = pbw_normal_form(multiply(xp(1), xm(1)));
    EXPECT_EQ(nf, multiply(xm(1), xp(1)) + h(2) - h(0));
    EXPECT_EQ(to_string(nf), "xm(1)*xp(1) + h(2) - h(0)");
    EXPECT_EQ(degree(nf), 2);
    EXPECT_EQ(degree(UEAElement{}), kDegreeOfZero);
}

TEST(NormalForm, DividedPower) {
    UEAElement d = divided_power(xp(1), 3);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.begin()->second, Scalar(1, 6));
    EXPECT_EQ(d.begin()->first.size(), 3u);
    EXPECT_TRUE(divided_power(xp(1), -1).is_zero());
    EXPECT_EQ(divided_power(xp(1), 0), unit());
}

TEST(NormalForm, BinomialOfH) {
    // binom(h, 2) = (h^2 - h) / 2
    UEAElement b = binomial(h(0), 2);
    EXPECT_EQ(b, (ordered_product(h(0), h(0)) - h(0)) * Scalar(1, 2));
}

TEST(NormalForm, IdempotentAndOrdered) {
    std::mt19937 rng(21);
    for (int i = 0; i < 200; ++i) {
        UEAElement nf = pbw_normal_form(word_element(test::random_word(rng, 4, 5)));
        for (const auto& [w, c] : nf) EXPECT_TRUE(is_ordered(w));
        EXPECT_EQ(pbw_normal_form(nf), nf);
    }
}

TEST(NormalForm, ConfluenceOfStrategies) {
    std::mt19937 rng(22);
    for (int i = 0; i < 300; ++i) {
        UEAElement w = word_element(test::random_word(rng, 4, 6));
        ASSERT_EQ(pbw_normal_form(w, RewriteStrategy::LeftmostDescent),
                  pbw_normal_form(w, RewriteStrategy::RightmostDescent));
    }
}

TEST(NormalForm, TerminationMeasureDecreases) {
    std::mt19937 rng(23);
    for (int i = 0; i < 500; ++i) {
        Word w = test::random_word(rng, 5, 7);
        for (auto s : {RewriteStrategy::LeftmostDescent, RewriteStrategy::RightmostDescent}) {
            auto step = rewrite_step(w, s);
            if (!step) {
                EXPECT_TRUE(is_ordered(w));
                continue;
            }
            auto m = rewrite_measure(w);
            EXPECT_LT(rewrite_measure(step->swapped), m);
            for (const auto& [t, c] : step->bracket_terms) EXPECT_LT(rewrite_measure(t), m);
        }
    }
}

TEST(StructuredProduct, AgreesWithRewriting) {
    std::mt19937 rng(24);
    for (int i = 0; i < 300; ++i) {
        UEAElement a = pbw_normal_form(word_element(test::random_word(rng, 4, 3)));
        UEAElement b = pbw_normal_form(word_element(test::random_word(rng, 4, 3)));
        ASSERT_EQ(ordered_product(a, b), pbw_normal_form(multiply(a, b)));
    }
}

TEST(StructuredProduct, Associative) {
    std::mt19937 rng(25);
    for (int i = 0; i < 100; ++i) {
        UEAElement a = pbw_normal_form(word_element(test::random_word(rng, 3, 3)));
        UEAElement b = pbw_normal_form(word_element(test::random_word(rng, 3, 3)));
        UEAElement c = pbw_normal_form(word_element(test::random_word(rng, 3, 3)));
        ASSERT_EQ(ordered_product(ordered_product(a, b), c), ordered_product(a, ordered_product(b, c)));
    }
}

TEST(StructuredProduct, CommutatorOfGeneratorsIsBracket) {
    std::mt19937 rng(26);
    for (int i = 0; i < 200; ++i) {
        LieElement a = test::random_lie(rng, 6), b = test::random_lie(rng, 6);
        EXPECT_EQ(commutator(from_lie(a), from_lie(b)), from_lie(bracket(a, b)));
    }
}

TEST(Equality, ModuloRelations) {
    EXPECT_TRUE(equal(multiply(xp(1), xm(1)) - multiply(xm(1), xp(1)), h(2) - h(0)));
    EXPECT_TRUE(equal(multiply(h(1), h(3)), multiply(h(3), h(1))));
    EXPECT_FALSE(equal(xp(1), xp(2)));
}
