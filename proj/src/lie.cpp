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

#include "onsager/lie.hpp"

#include <atomic>
#include <cstdlib>

namespace onsager {

namespace fault {
namespace {
std::atomic<bool> g_fault{false};
std::atomic<std::uint64_t> g_epoch{0};
}  // namespace

void set_structure_constant_fault(bool on) {
    g_fault.store(on);
    g_epoch.fetch_add(1);
}
bool structure_constant_fault() noexcept { return g_fault.load(std::memory_order_relaxed); }
std::uint64_t epoch() noexcept { return g_epoch.load(std::memory_order_acquire); }
}  // namespace fault

std::strong_ordering compare(const BasisElement& a, const BasisElement& b) { return a <=> b; }

LieElement generator(Kind kind, int index) {
    switch (kind) {
        case Kind::H:
            return LieElement(BasisElement::h(std::abs(index)));
        case Kind::XMinus:
        case Kind::XPlus:
            if (index == 0) return {};
            if (index < 0) return LieElement(BasisElement{kind, -index}, Scalar(-1));
            return LieElement(BasisElement{kind, index});
    }
    throw DomainError("unknown generator kind");
}

namespace {

// [x+_j, x-_l] with j, l >= 1
LieElement plus_minus(int j, int l) {
    LieElement r = generator(Kind::H, j + l);
    r -= generator(Kind::H, j - l);
    if (j == 1 && l == 1 && fault::structure_constant_fault()) r += generator(Kind::H, 0);
    return r;
}

// [h_k, x_j] for x of the given kind
LieElement h_x(int k, Kind kind, int j) {
    LieElement r = generator(kind, j + k);
    r += generator(kind, j - k);
    return r * Scalar(kind == Kind::XPlus ? 2 : -2);
}

}  // namespace

LieElement bracket(const BasisElement& a, const BasisElement& b) {
    if (a.kind == b.kind) return {};
    if (a.kind == Kind::XPlus && b.kind == Kind::XMinus) return plus_minus(a.index, b.index);
    if (a.kind == Kind::XMinus && b.kind == Kind::XPlus) return -plus_minus(b.index, a.index);
    if (a.kind == Kind::H) return h_x(a.index, b.kind, b.index);
    return -h_x(b.index, a.kind, a.index);
}

LieElement bracket(const LieElement& a, const LieElement& b) {
    LieElement r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) r.add_scaled(bracket(ea, eb), ca * cb);
    return r;
}

LieElement tau(const LieElement& a) {
    LieElement r;
    for (const auto& [e, c] : a) {
        switch (e.kind) {
            case Kind::H:
                r.add(e, -c);
                break;
            case Kind::XPlus:
                r.add(BasisElement::x_minus(e.index), c);
                break;
            case Kind::XMinus:
                r.add(BasisElement::x_plus(e.index), c);
                break;
        }
    }
    return r;
}

std::string to_string(const BasisElement& b) {
    const char* name = b.kind == Kind::XPlus ? "xp" : b.kind == Kind::XMinus ? "xm" : "h";
    return std::string(name) + "(" + std::to_string(b.index) + ")";
}

std::string to_string(const LieElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    // descending basis order, matching the element printer
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        Scalar c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (c != 1) out += to_string(c) + "*";
        out += to_string(it->first);
    }
    return out;
}

}  // namespace onsager
