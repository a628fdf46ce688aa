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

#ifndef ONSAGER_STRAIGHTENING_HPP
#define ONSAGER_STRAIGHTENING_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "onsager/elements.hpp"
#include "onsager/uea.hpp"

namespace onsager {

// (x+-_index)^{(order)}
struct DividedX {
    Sign sign = Sign::Plus;
    int index = 1;
    int order = 1;
    friend auto operator<=>(const DividedX&, const DividedX&) = default;
};

// Lambda_{j,l,order}
struct LambdaFactor {
    int j = 1;
    int l = 1;
    int order = 1;
    friend auto operator<=>(const LambdaFactor&, const LambdaFactor&) = default;
};

/*
 * One generator of the integral form. Ordering puts every x- factor before
 * every Lambda factor before every x+ factor, then compares fields.
 */
class MFactor {
   public:
    MFactor(DividedX x) : v_(x) {}       // NOLINT(google-explicit-constructor)
    MFactor(LambdaFactor l) : v_(l) {}   // NOLINT(google-explicit-constructor)

    static MFactor x(Sign sign, int index, int order) { return DividedX{sign, index, order}; }
    static MFactor lam(int j, int l, int order) { return LambdaFactor{j, l, order}; }

    bool is_lambda() const { return std::holds_alternative<LambdaFactor>(v_); }
    const DividedX& as_x() const { return std::get<DividedX>(v_); }
    const LambdaFactor& as_lambda() const { return std::get<LambdaFactor>(v_); }
    int order() const { return is_lambda() ? as_lambda().order : as_x().order; }

    // 0 for x-, 1 for Lambda, 2 for x+
    int block() const { return is_lambda() ? 1 : (as_x().sign == Sign::Minus ? 0 : 2); }

    friend std::strong_ordering operator<=>(const MFactor& a, const MFactor& b);
    friend bool operator==(const MFactor& a, const MFactor& b) { return a.v_ == b.v_; }

   private:
    std::variant<DividedX, LambdaFactor> v_;
};

using MWord = std::vector<MFactor>;

// Q-combination of (not necessarily ordered) products of M-factors.
using MForm = LinearCombination<MWord, Scalar>;

/*
 * Which Lambda pairs may appear in a canonical monomial.
 *  Primitive: (a, 1), a >= 1. The degree-one parts h_{a-1} - h_{a+1} are
 *    independent, so ordered monomials are linearly independent.
 *  AllPairs: every (j, l) with j >= l >= 1. Linearly dependent once pairs
 *    with j >= 3 appear; kept for the audit that exhibits the dependency.
 */
enum class LambdaFamily { Primitive, AllPairs };

struct Truncation {
    int max_mdegree = 3;
    int max_index = 3;
};

class NoLambdaExpression : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class OutOfTruncation : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class AmbiguousSolution : public std::runtime_error {
   public:
    AmbiguousSolution(const std::string& what, MForm kernel) : std::runtime_error(what), kernel_(std::move(kernel)) {}
    const MForm& kernel() const noexcept { return kernel_; }

   private:
    MForm kernel_;
};

int mdegree(const MWord& m);
bool is_canonical(const MWord& m, LambdaFamily family = LambdaFamily::Primitive);

// Smallest max_index for which a truncation contains every factor of m.
int factor_index(const MFactor& f);

UEAElement expand(const MFactor& f);
UEAElement expand(const MWord& m);
UEAElement expand(const MForm& a);

MForm product(const MForm& a, const MForm& b);  // free concatenation

// (x_j)^{(r)} (x_j)^{(s)} = C(r+s, s) (x_j)^{(r+s)}
std::pair<Scalar, MFactor> straighten_same_x(Sign sign, int j, int r, int s);

// (x+_j)^{(r)} (x-_l)^{(s)} rewritten with x- factors first
MForm straighten_plus_minus(int j, int r, int l, int s);

// D+-_{u,v}(j,l) as a combination of products of divided powers
MForm duv_mform(Sign sign, int u, int v, int j, int l);

enum class LambdaSide { PlusLeft, MinusRight };

/*
 * PlusLeft:   (x+_x)^{(r)} Lambda_{k,m,n} with Lambda moved to the left.
 * MinusRight: Lambda_{k,m,n} (x-_x)^{(r)} with Lambda moved to the right.
 */
MForm move_x_past_lambda(LambdaSide side, int x_index, int r, int k, int m, int n);

/*
 * Lambda_{j,l,k} Lambda_{j,l,m} = C(k+m,k) Lambda_{j,l,k+m} + residual, the
 * residual solved exactly in canonical Lambda monomials of lower mdegree.
 */
MForm merge_lambda_pair(int j, int l, int k, int m, LambdaFamily family = LambdaFamily::Primitive);

// Coordinates of a single Lambda_{j,l,k} in canonical Lambda monomials.
MForm rebase_lambda(int j, int l, int k, LambdaFamily family = LambdaFamily::Primitive);

// Rewrites into canonical monomials using the straightening rules.
MForm normalize_to_basis(const MForm& a, LambdaFamily family = LambdaFamily::Primitive);

// Canonical monomials with mdegree <= max_mdegree and factor indices <= max_index.
std::vector<MWord> enumerate_basis(int max_mdegree, int max_index, LambdaFamily family = LambdaFamily::Primitive);

/*
 * Unique expansion of a in canonical monomials within the truncation. The
 * x-factors of each monomial are read off the PBW words; the remaining
 * h-polynomial is solved exactly against Lambda monomials.
 */
MForm coordinates(const UEAElement& a, Truncation bounds, LambdaFamily family = LambdaFamily::Primitive);

// Smallest max_index under which coordinates(a) can succeed (0 for scalars);
// throws NoLambdaExpression if no truncation contains a.
int required_index(const UEAElement& a);

struct IntegralityReport {
    bool integral = false;
    MForm coordinates;
    std::vector<std::pair<MWord, Scalar>> non_integral;
    std::string failure;  // set when coordinates could not be computed
};

IntegralityReport integrality_check(const UEAElement& a, Truncation bounds,
                                    LambdaFamily family = LambdaFamily::Primitive);

std::string to_string(const MFactor& f);  // "xp(1)", "dp(xm(2),3)", "lam(2,1,3)"
std::string to_string(const MWord& m);
std::string to_string(const MForm& a);

}  // namespace onsager

#endif
