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

#ifndef ONSAGER_UEA_HPP
#define ONSAGER_UEA_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "onsager/lie.hpp"

namespace onsager {

using Word = std::vector<BasisElement>;

// Shorter words first, then lexicographic in the basis order.
struct GradedLexLess {
    bool operator()(const Word& a, const Word& b) const;
};

using UEAElement = LinearCombination<Word, Scalar, GradedLexLess>;

inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

UEAElement unit();
UEAElement from_scalar(const Scalar& s);
UEAElement from_lie(const LieElement& a);
UEAElement from_generator(Kind kind, int index);

// Non-decreasing in the basis order.
bool is_ordered(const Word& w);

// Free concatenation; no reordering.
UEAElement multiply(const UEAElement& a, const UEAElement& b);

/*
 * Generic rewriting: replace a descent ab (a > b) by ba + [a,b] until every
 * word is ordered. Letters of one kind commute, so maximal same-kind runs are
 * sorted eagerly. Results are memoized per strategy.
 */
enum class RewriteStrategy { LeftmostDescent, RightmostDescent };

UEAElement pbw_normal_form(const UEAElement& a, RewriteStrategy strategy = RewriteStrategy::LeftmostDescent);

struct RewriteStep {
    std::size_t position = 0;
    Word swapped;
    std::vector<std::pair<Word, Scalar>> bracket_terms;
};

// One rewrite at the chosen descent, or nullopt if the word is ordered.
std::optional<RewriteStep> rewrite_step(const Word& w, RewriteStrategy strategy);

// (length, inversion count); strictly decreases along every rewrite.
std::pair<std::size_t, std::size_t> rewrite_measure(const Word& w);

/*
 * Structured route: left multiplication of an ordered word by one generator
 * has a closed form (x- inserts, h acts as a derivation on the x- block, x+
 * runs through the h block and then brackets into the x- block).
 */
UEAElement left_multiply(const BasisElement& g, const Word& ordered);

// Normal form of a*b; inputs that are not already normal are normalized first.
UEAElement ordered_product(const UEAElement& a, const UEAElement& b);

UEAElement commutator(const UEAElement& a, const UEAElement& b);

// Filtration degree of the normal form; kDegreeOfZero for 0.
int degree(const UEAElement& a);

// Terms of the normal form whose length equals degree(a).
UEAElement top_degree_part(const UEAElement& a);

// a^k / k!; zero for k < 0.
UEAElement divided_power(const UEAElement& a, int k);

// a(a-1)...(a-k+1) / k!; zero for k < 0.
UEAElement binomial(const UEAElement& a, int k);

bool equal(const UEAElement& a, const UEAElement& b);

std::string to_string(const Word& w);
std::string to_string(const UEAElement& a);

}  // namespace onsager

#endif
