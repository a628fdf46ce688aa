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

#include <random>

#include "onsager/linalg.hpp"
#include "onsager/straightening.hpp"

using namespace onsager;

namespace {

UEAElement xp(int j) { return from_generator(Kind::XPlus, j); }
UEAElement xm(int l) { return from_generator(Kind::XMinus, l); }
UEAElement h(int k) { return from_generator(Kind::H, k); }
UEAElement mul(const UEAElement& a, const UEAElement& b) { return ordered_product(a, b); }

MFactor XP(int j, int r = 1) { return MFactor::x(Sign::Plus, j, r); }
MFactor XM(int l, int s = 1) { return MFactor::x(Sign::Minus, l, s); }
MFactor LAM(int j, int l, int k) { return MFactor::lam(j, l, k); }

MForm form(std::initializer_list<std::pair<MWord, Scalar>> terms) {
    MForm r;
    for (const auto& [w, c] : terms) r.add(w, c);
    return r;
}

MWord random_mword(std::mt19937& rng, int max_index, int max_factors, int max_order) {
    std::uniform_int_distribution<int> nf(1, max_factors), kind(0, 2), idx(1, max_index), ord(1, max_order);
    MWord w;
    for (int n = nf(rng); n > 0; --n) {
        switch (kind(rng)) {
            case 0:
                w.push_back(XM(idx(rng), ord(rng)));
                break;
            case 1:
                w.push_back(LAM(idx(rng), idx(rng), ord(rng)));
                break;
            default:
                w.push_back(XP(idx(rng), ord(rng)));
        }
    }
    return w;
}

}  // namespace

TEST(Expand, Examples) {
    EXPECT_EQ(expand(MWord{XP(1, 2)}), mul(xp(1), xp(1)) * rational(1, 2));
    EXPECT_EQ(expand(MWord{LAM(1, 1, 1)}), h(0) - h(2));
    EXPECT_EQ(expand(MWord{XM(1), LAM(1, 1, 1), XP(1)}), mul(mul(xm(1), h(0) - h(2)), xp(1)));
    EXPECT_EQ(expand(MWord{}), unit());
}

TEST(MFactorOrder, BlocksThenFields) {
    EXPECT_LT(XM(5, 3), LAM(1, 1, 1));
    EXPECT_LT(LAM(9, 9, 9), XP(1));
    EXPECT_LT(LAM(1, 1, 3), LAM(2, 1, 1));
    EXPECT_TRUE(is_canonical({XM(1), XM(2), LAM(1, 1, 2), LAM(3, 1, 1), XP(2, 4)}));
    EXPECT_FALSE(is_canonical({XP(1), XM(1)}));
    EXPECT_FALSE(is_canonical({XP(1), XP(1)}));
    EXPECT_FALSE(is_canonical({LAM(2, 2, 1)}));
    EXPECT_TRUE(is_canonical({LAM(2, 2, 1)}, LambdaFamily::AllPairs));
    EXPECT_EQ(mdegree({XM(1, 2), LAM(1, 1, 3)}), 5);
}

TEST(SameX, Examples) {
    auto [c, f] = straighten_same_x(Sign::Plus, 1, 2, 3);
    EXPECT_EQ(c, 10);
    EXPECT_EQ(f, XP(1, 5));
    auto [c0, f0] = straighten_same_x(Sign::Plus, 4, 0, 2);
    EXPECT_EQ(c0, 1);
    EXPECT_EQ(f0, XP(4, 2));
    EXPECT_EQ(expand(MWord{XP(2), XP(2)}), expand(MWord{XP(2, 2)}) * Scalar(2));
}

TEST(PlusMinus, Examples) {
    EXPECT_EQ(straighten_plus_minus(2, 1, 3, 1), form({{{XM(3), XP(2)}, 1}, {{LAM(2, 3, 1)}, -1}}));
    EXPECT_EQ(straighten_plus_minus(2, 3, 1, 0), form({{{XP(2, 3)}, 1}}));
    EXPECT_EQ(expand(straighten_plus_minus(1, 2, 1, 2)), expand(MWord{XP(1, 2), XM(1, 2)}));
}

TEST(PlusMinus, OracleGrid) {
    for (int j = 1; j <= 2; ++j)
        for (int l = 1; l <= 2; ++l)
            for (int r = 0; r <= 2; ++r)
                for (int s = 0; s <= 2; ++s)
                    ASSERT_EQ(expand(straighten_plus_minus(j, r, l, s)), expand(MWord{XP(j, r), XM(l, s)}))
                        << j << l << r << s;
}

TEST(MovePastLambda, Examples) {
    MForm m = move_x_past_lambda(LambdaSide::PlusLeft, 2, 1, 1, 1, 1);
    UEAElement expected = mul(from_lie(lambda1(1, 1)), xp(2)) + from_lie(d_triple(Sign::Plus, 1, 2, 1, 1)) * Scalar(2);
    EXPECT_EQ(expand(m), expected);
    EXPECT_EQ(expand(m), mul(xp(2), from_lie(lambda1(1, 1))));
    EXPECT_EQ(move_x_past_lambda(LambdaSide::PlusLeft, 3, 2, 1, 2, 0), form({{{XP(3, 2)}, 1}}));
}

TEST(MovePastLambda, OracleGrid) {
    for (int x = 1; x <= 2; ++x)
        for (int k = 1; k <= 2; ++k)
            for (int m = 1; m <= 2; ++m)
                for (int r = 0; r <= 2; ++r)
                    for (int n = 0; n <= 2; ++n) {
                        ASSERT_EQ(expand(move_x_past_lambda(LambdaSide::PlusLeft, x, r, k, m, n)),
                                  expand(MWord{XP(x, r), LAM(k, m, n)}));
                        ASSERT_EQ(expand(move_x_past_lambda(LambdaSide::MinusRight, x, r, k, m, n)),
                                  expand(MWord{LAM(k, m, n), XM(x, r)}));
                    }
}

TEST(MergeLambda, LeadingCoefficientAndValue) {
    MForm m = merge_lambda_pair(1, 1, 1, 1);
    EXPECT_EQ(m.coefficient({LAM(1, 1, 2)}), 2);
    for (const auto& [w, c] : m)
        if (w != MWord{LAM(1, 1, 2)}) EXPECT_LE(mdegree(w), 1);
    EXPECT_EQ(merge_lambda_pair(2, 1, 2, 1).coefficient({LAM(2, 1, 3)}), 3);
    for (int k = 1; k <= 3; ++k)
        for (int mm = 1; mm <= 3; ++mm)
            ASSERT_EQ(expand(merge_lambda_pair(2, 1, k, mm)), expand(MWord{LAM(2, 1, k), LAM(2, 1, mm)}));
}

TEST(MergeLambda, SamePairAloneIsInsufficient) {
    // Lambda_1^2 - 2 Lambda_2 = p_2, which is not a combination of 1 and p_1
    MForm m = merge_lambda_pair(1, 1, 1, 1);
    bool other_pair = false;
    for (const auto& [w, c] : m)
        for (const auto& f : w)
            if (f.is_lambda() && f.as_lambda().j != 1) other_pair = true;
    EXPECT_TRUE(other_pair);
}

TEST(Normalize, Examples) {
    EXPECT_EQ(normalize_to_basis(form({{{XP(1), XM(1)}, 1}})), form({{{XM(1), XP(1)}, 1}, {{LAM(1, 1, 1)}, -1}}));
    MForm canon = form({{{XM(1), LAM(2, 1, 2), XP(3)}, 5}});
    EXPECT_EQ(normalize_to_basis(canon), canon);
    EXPECT_EQ(normalize_to_basis(form({{{XP(1, 2), XP(1, 3)}, 1}})), form({{{XP(1, 5)}, 10}}));
}

TEST(Normalize, SemanticPreservationAndCanonicalOutput) {
    std::mt19937 rng(41);
    for (int i = 0; i < 200; ++i) {
        MForm in;
        in.add(random_mword(rng, 2, 3, 2), Scalar(1 + i % 3));
        in.add(random_mword(rng, 2, 2, 2), Scalar(-1));
        MForm out = normalize_to_basis(in);
        for (const auto& [w, c] : out) ASSERT_TRUE(is_canonical(w)) << to_string(w);
        ASSERT_EQ(expand(out), expand(in)) << to_string(in);
        // integer inputs stay integral
        for (const auto& [w, c] : out) ASSERT_TRUE(is_integer(c)) << to_string(in) << " -> " << to_string(out);
    }
}

TEST(Normalize, AgreesWithCoordinates) {
    std::mt19937 rng(42);
    for (int i = 0; i < 60; ++i) {
        MForm in(random_mword(rng, 2, 3, 2));
        MForm out = normalize_to_basis(in);
        UEAElement e = expand(in);
        int idx = std::max(required_index(e), 2);
        int deg = 0;
        for (const auto& [w, c] : out) deg = std::max(deg, mdegree(w));
        MForm got;
        ASSERT_NO_THROW(got = coordinates(e, {deg, idx})) << to_string(in) << " -> " << to_string(out) << " idx " << idx;
        ASSERT_EQ(got, out) << to_string(in);
    }
}

TEST(EnumerateBasis, Examples) {
    auto b11 = enumerate_basis(1, 1);
    ASSERT_EQ(b11.size(), 4u);
    EXPECT_EQ(b11[0], MWord{});
    EXPECT_EQ(enumerate_basis(0, 3), std::vector<MWord>{MWord{}});
    auto b21 = enumerate_basis(2, 1);
    for (const MWord& w : {MWord{XM(1, 2)}, MWord{LAM(1, 1, 2)}, MWord{XM(1), XP(1)}})
        EXPECT_NE(std::find(b21.begin(), b21.end(), w), b21.end());
    for (const auto& w : enumerate_basis(3, 3)) EXPECT_TRUE(is_canonical(w));
}

TEST(EnumerateBasis, LinearlyIndependentAtThreeFour) {
    EchelonForm<Word, GradedLexLess> ech;
    auto basis = enumerate_basis(3, 4);
    for (const auto& w : basis) ASSERT_FALSE(ech.insert(expand(w)).has_value()) << to_string(w);
    EXPECT_EQ(ech.rank(), basis.size());
}

TEST(EnumerateBasis, AllPairsFamilyIsDependent) {
    EchelonForm<Word, GradedLexLess> ech;
    bool dependent = false;
    for (const auto& w : enumerate_basis(1, 3, LambdaFamily::AllPairs)) dependent |= ech.insert(expand(w)).has_value();
    EXPECT_TRUE(dependent);
    EXPECT_TRUE(equal(expand(MWord{LAM(1, 1, 1)}) - expand(MWord{LAM(2, 2, 1)}) + expand(MWord{LAM(3, 1, 1)}),
                      UEAElement{}));
    try {
        coordinates(h(2) - h(0), {1, 3}, LambdaFamily::AllPairs);
        FAIL() << "expected AmbiguousSolution";
    } catch (const AmbiguousSolution& e) {
        EXPECT_FALSE(e.kernel().is_zero());
        EXPECT_TRUE(equal(expand(e.kernel()), UEAElement{}));
    }
}

TEST(Coordinates, Examples) {
    UEAElement e = pbw_normal_form(multiply(xp(1), xm(1)));
    EXPECT_EQ(coordinates(e, {2, 1}), form({{{XM(1), XP(1)}, 1}, {{LAM(1, 1, 1)}, -1}}));
    for (const auto& b : enumerate_basis(3, 3)) ASSERT_EQ(coordinates(expand(b), {3, 3}), MForm(b)) << to_string(b);
    UEAElement d = duv(Sign::Plus, 2, 2, 1, 1);
    IntegralityReport rep = integrality_check(d, {4, required_index(d)});
    EXPECT_TRUE(rep.integral) << rep.failure;
}

TEST(Coordinates, AgreesWithEliminationOnLambdaElements) {
    for (int j = 1; j <= 3; ++j)
        for (int l = 1; l <= 3; ++l)
            for (int k = 1; k <= 2; ++k) {
                UEAElement q = lambda(j, l, k);
                const int idx = required_index(q);
                std::vector<MWord> cands;
                for (const auto& w : enumerate_basis(k, idx))
                    if (std::all_of(w.begin(), w.end(), [](const MFactor& f) { return f.is_lambda(); })) cands.push_back(w);
                EchelonForm<Word, GradedLexLess> ech;
                for (const auto& w : cands) ASSERT_FALSE(ech.insert(expand(w)).has_value());
                auto [combo, rest] = ech.reduce(q);
                ASSERT_TRUE(rest.is_zero());
                MForm expected;
                for (const auto& [i, c] : combo) expected.add(cands[i], c);
                EXPECT_EQ(coordinates(q, {k, idx}), expected) << j << l << k;
                if (idx > 1) EXPECT_THROW(coordinates(q, {k, idx - 1}), OutOfTruncation);
            }
}

TEST(Coordinates, OutOfTruncation) {
    EXPECT_THROW(coordinates(h(0), {3, 3}), OutOfTruncation);
    EXPECT_THROW(coordinates(h(1), {3, 3}), OutOfTruncation);
    EXPECT_THROW(coordinates(xp(5), {3, 3}), OutOfTruncation);
    EXPECT_THROW(coordinates(expand(MWord{XP(1, 3)}), {2, 3}), OutOfTruncation);
}

TEST(Integrality, Examples) {
    EXPECT_TRUE(integrality_check(lambda(1, 1, 2), {2, 3}).integral);
    IntegralityReport half = integrality_check(xp(1) * rational(1, 2), {1, 1});
    EXPECT_FALSE(half.integral);
    ASSERT_EQ(half.non_integral.size(), 1u);
    UEAElement prod = expand(MWord{XP(1, 2), XM(1, 2)});
    EXPECT_TRUE(integrality_check(prod, {4, required_index(prod)}).integral);
    EXPECT_FALSE(integrality_check(h(0), {2, 2}).integral);
}
