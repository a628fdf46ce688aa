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

#ifndef ONSAGER_LINEAR_COMBINATION_HPP
#define ONSAGER_LINEAR_COMBINATION_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <utility>

namespace onsager {

/*
 * Finite formal sum of keys with coefficients. Zero coefficients are never
 * stored, so structural equality is mathematical equality.
 */
template <class Key, class Coeff, class Compare = std::less<Key>>
class LinearCombination {
   public:
    using key_type = Key;
    using coeff_type = Coeff;
    using map_type = std::map<Key, Coeff, Compare>;
    using const_iterator = typename map_type::const_iterator;

    LinearCombination() = default;
    explicit LinearCombination(Key key, Coeff coeff = Coeff(1)) { add(std::move(key), coeff); }

    void add(const Key& key, const Coeff& coeff) {
        if (coeff == Coeff()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, coeff);
            return;
        }
        it->second += coeff;
        if (it->second == Coeff()) terms_.erase(it);
    }

    Coeff coefficient(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Coeff() : it->second;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }
    const map_type& terms() const noexcept { return terms_; }

    LinearCombination& operator+=(const LinearCombination& rhs) {
        for (const auto& [k, c] : rhs.terms_) add(k, c);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& rhs) {
        for (const auto& [k, c] : rhs.terms_) add(k, -c);
        return *this;
    }
    LinearCombination& operator*=(const Coeff& s) {
        if (s == Coeff()) {
            terms_.clear();
            return *this;
        }
        for (auto& kv : terms_) kv.second *= s;
        return *this;
    }

    // this += s * rhs
    void add_scaled(const LinearCombination& rhs, const Coeff& s) {
        if (s == Coeff()) return;
        for (const auto& [k, c] : rhs.terms_) add(k, c * s);
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(LinearCombination a, const Coeff& s) { return a *= s; }
    friend LinearCombination operator*(const Coeff& s, LinearCombination a) { return a *= s; }
    friend LinearCombination operator-(LinearCombination a) { return a *= Coeff(-1); }
    friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

   private:
    map_type terms_;
};

}  // namespace onsager

#endif
