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

#ifndef ONSAGER_SCALAR_HPP
#define ONSAGER_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace onsager {

// Exact rational, always kept in lowest terms with a positive denominator.
using Scalar = mpq_class;

// Raised when an operation is applied outside its mathematical domain.
class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// p/q reduced to lowest terms; q must be nonzero.
Scalar rational(long p, long q = 1);

Scalar factorial(int n);

// C(n, k) for n >= 0; zero when k < 0 or k > n.
Scalar binomial(int n, int k);

bool is_integer(const Scalar& s);

// "3", "-3/2"
std::string to_string(const Scalar& s);

// Accepts "p" or "p/q" with optional sign; throws DomainError otherwise.
Scalar parse_scalar(std::string_view text);

}  // namespace onsager

#endif
