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

#ifndef ONSAGER_EXPRESSION_HPP
#define ONSAGER_EXPRESSION_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "onsager/elements.hpp"
#include "onsager/uea.hpp"

namespace onsager {

/*
 * Surface syntax:
 *   expr    := term (('+' | '-') term)*
 *   term    := unary ('*' unary)*
 *   unary   := '-' unary | atom
 *   atom    := number | '(' expr ')' | '[' expr ',' expr ']' | call
 *   call    := xp(i) | xm(i) | h(i) | lam(j,l,k) | p(u,j,l) | d1(s,u,j,l)
 *            | duv(s,u,v,j,l) | dt(s,u,j,k,m) | dp(expr,n) | binom(expr,n)
 *   number  := digits ('/' digits)?      s := '+' | '-'      i := ['-'] digits
 */
enum class ExprKind { Number, Generator, Lambda, P, D1, Duv, DTriple, DividedPower, Binom, Add, Sub, Mul, Neg, Bracket };

struct Expr {
    ExprKind kind = ExprKind::Number;
    Scalar value;                               // Number
    Kind generator = Kind::H;                   // Generator
    Sign sign = Sign::Plus;                     // D1, Duv, DTriple
    std::vector<int> ints;                      // integer arguments in source order
    std::vector<std::shared_ptr<const Expr>> kids;
};

using ExprPtr = std::shared_ptr<const Expr>;

class SyntaxError : public std::runtime_error {
   public:
    SyntaxError(const std::string& message, int line, int column);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

   private:
    int line_;
    int column_;
};

ExprPtr parse(std::string_view text);

// Canonical text; parse(print(e)) prints identically.
std::string print(const ExprPtr& e);

// Value in U(O), in normal form. DomainError for illegal indices.
UEAElement evaluate(const ExprPtr& e);

// The element as a Lie element if its normal form is a combination of generators.
std::optional<LieElement> as_lie(const UEAElement& a);

}  // namespace onsager

#endif
