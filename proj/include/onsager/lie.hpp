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

#ifndef ONSAGER_LIE_HPP
#define ONSAGER_LIE_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "onsager/linear_combination.hpp"
#include "onsager/scalar.hpp"

namespace onsager {

// Declaration order is the PBW order: x- < h < x+.
enum class Kind : std::uint8_t { XMinus = 0, H = 1, XPlus = 2 };

/*
 * Canonical basis vector: x-_l (l >= 1), h_k (k >= 0), x+_j (j >= 1).
 * Comparison is by kind, then ascending index.
 */
struct BasisElement {
    Kind kind = Kind::H;
    int index = 0;

    static constexpr BasisElement x_minus(int l) { return {Kind::XMinus, l}; }
    static constexpr BasisElement h(int k) { return {Kind::H, k}; }
    static constexpr BasisElement x_plus(int j) { return {Kind::XPlus, j}; }

    constexpr bool is_canonical() const noexcept { return kind == Kind::H ? index >= 0 : index >= 1; }

    friend constexpr auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

std::strong_ordering compare(const BasisElement& a, const BasisElement& b);

using LieElement = LinearCombination<BasisElement, Scalar>;

/*
 * Any integer index is accepted: h_{-k} = h_k, x_{-j} = -x_j, x_0 = 0.
 * Throws DomainError for an out-of-range enum value.
 */
LieElement generator(Kind kind, int index);

LieElement bracket(const BasisElement& a, const BasisElement& b);
LieElement bracket(const LieElement& a, const LieElement& b);

// The involution x+ <-> x-, h -> -h.
LieElement tau(const LieElement& a);

std::string to_string(const BasisElement& b);  // "xp(3)", "xm(1)", "h(0)"
std::string to_string(const LieElement& a);

namespace fault {

/*
 * Test hook: perturbs [x+_1, x-_1] by an extra h_0 so that downstream checks
 * can be shown to fail. Every memo cache in the library keys on epoch().
 */
void set_structure_constant_fault(bool on);
bool structure_constant_fault() noexcept;
std::uint64_t epoch() noexcept;

class ScopedStructureConstantFault {
   public:
    ScopedStructureConstantFault() { set_structure_constant_fault(true); }
    ~ScopedStructureConstantFault() { set_structure_constant_fault(false); }
    ScopedStructureConstantFault(const ScopedStructureConstantFault&) = delete;
    ScopedStructureConstantFault& operator=(const ScopedStructureConstantFault&) = delete;
};

}  // namespace fault

}  // namespace onsager

#endif
