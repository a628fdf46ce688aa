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

#ifndef ONSAGER_LINALG_HPP
#define ONSAGER_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "onsager/linear_combination.hpp"
#include "onsager/scalar.hpp"

namespace onsager {

/*
 * Sparse exact row echelon form over Q. Columns are the inserted vectors
 * (numbered in insertion order); rows are keys of type Key. Each stored
 * vector carries the combination of inserted columns it equals, so
 * reduction yields solution coefficients directly.
 */
template <class Key, class Compare = std::less<Key>>
class EchelonForm {
   public:
    using Vector = LinearCombination<Key, Scalar, Compare>;
    using Combination = LinearCombination<std::size_t, Scalar>;

    // Returns a kernel vector if the new column depends on earlier ones.
    std::optional<Combination> insert(Vector v) {
        Combination combo(columns_++);
        // only the lead needs to be new; lower terms may stay unreduced
        while (!v.is_zero()) {
            auto p = pivots_.find(v.terms().rbegin()->first);
            if (p == pivots_.end()) break;
            const Scalar f = v.terms().rbegin()->second / p->second.vec.terms().rbegin()->second;
            v.add_scaled(p->second.vec, -f);
            combo.add_scaled(p->second.combo, -f);
        }
        if (v.is_zero()) {
            kernel_.push_back(combo);
            return combo;
        }
        Key lead = v.terms().rbegin()->first;
        pivots_.emplace(std::move(lead), Row{std::move(v), std::move(combo)});
        return std::nullopt;
    }

    /*
     * Writes target = sum c_i column_i + remainder with remainder free of
     * pivot leads; returns the c_i (negated bookkeeping handled here) and
     * the remainder.
     */
    std::pair<Combination, Vector> reduce(Vector target) const {
        Combination combo;
        reduce_in_place(target, combo);
        return {-combo, std::move(target)};
    }

    std::size_t rank() const noexcept { return pivots_.size(); }
    std::size_t columns() const noexcept { return columns_; }
    const std::vector<Combination>& kernel() const noexcept { return kernel_; }

    // Row keys that carry a pivot.
    std::vector<Key> pivot_keys() const {
        std::vector<Key> out;
        for (const auto& kv : pivots_) out.push_back(kv.first);
        return out;
    }

   private:
    struct Row {
        Vector vec;
        Combination combo;
    };

    // Repeatedly cancels the leading key against a pivot; stops at the first
    // leading key without a pivot (later keys may still be pivots, so keep going).
    void reduce_in_place(Vector& v, Combination& combo) const {
        Vector stuck;
        while (!v.is_zero()) {
            auto lead_it = v.terms().rbegin();
            const Key lead = lead_it->first;
            const Scalar coeff = lead_it->second;
            auto p = pivots_.find(lead);
            if (p == pivots_.end()) {
                stuck.add(lead, coeff);
                v.add(lead, -coeff);
                continue;
            }
            const Scalar f = coeff / p->second.vec.terms().rbegin()->second;
            v.add_scaled(p->second.vec, -f);
            combo.add_scaled(p->second.combo, -f);
        }
        v = std::move(stuck);
    }

    std::map<Key, Row, Compare> pivots_;
    std::vector<Combination> kernel_;
    std::size_t columns_ = 0;
};

}  // namespace onsager

#endif
