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

#include "onsager/scalar.hpp"

#include <cctype>

namespace onsager {

Scalar rational(long p, long q) {
    if (q == 0) throw DomainError("zero denominator");
    Scalar r(p, q);
    r.canonicalize();
    return r;
}

Scalar factorial(int n) {
    if (n < 0) throw DomainError("factorial of negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Scalar(r);
}

Scalar binomial(int n, int k) {
    if (n < 0) throw DomainError("binomial with negative upper argument");
    if (k < 0 || k > n) return Scalar(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Scalar(r);
}

bool is_integer(const Scalar& s) { return s.get_den() == 1; }

std::string to_string(const Scalar& s) { return s.get_str(); }

Scalar parse_scalar(std::string_view text) {
    auto bad = [&] { return DomainError("malformed rational: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') i = 1;
    bool slash = false;
    bool digit_before = false, digit_after = false;
    for (std::size_t k = i; k < text.size(); ++k) {
        char c = text[k];
        if (c == '/') {
            if (slash) throw bad();
            slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            (slash ? digit_after : digit_before) = true;
        } else {
            throw bad();
        }
    }
    if (!digit_before || (slash && !digit_after)) throw bad();
    std::string body(text[0] == '+' ? text.substr(1) : text);
    Scalar r;
    if (r.set_str(body, 10) != 0) throw bad();
    if (r.get_den() == 0) throw DomainError("zero denominator");
    r.canonicalize();
    return r;
}

}  // namespace onsager
