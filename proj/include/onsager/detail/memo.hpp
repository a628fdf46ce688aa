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

#ifndef ONSAGER_DETAIL_MEMO_HPP
#define ONSAGER_DETAIL_MEMO_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

#include "onsager/lie.hpp"

namespace onsager::detail {

// Thread-safe map that drops its contents whenever fault::epoch() moves.
template <class K, class V, class Compare = std::less<K>>
class Memo {
   public:
    std::optional<V> find(const K& key) {
        std::shared_lock lock(mutex_);
        if (epoch_ != fault::epoch()) return std::nullopt;
        auto it = table_.find(key);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

    void insert(const K& key, const V& value) {
        std::unique_lock lock(mutex_);
        auto now = fault::epoch();
        if (epoch_ != now) {
            table_.clear();
            epoch_ = now;
        }
        table_.emplace(key, value);
    }

    template <class F>
    V get(const K& key, F&& compute) {
        if (auto hit = find(key)) return *hit;
        V value = compute();
        insert(key, value);
        return value;
    }

   private:
    std::shared_mutex mutex_;
    std::uint64_t epoch_ = 0;
    std::map<K, V, Compare> table_;
};

}  // namespace onsager::detail

#endif
