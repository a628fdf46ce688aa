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

#include "onsager/uea.hpp"

#include <algorithm>
#include <utility>

#include "onsager/detail/memo.hpp"

namespace onsager {

bool GradedLexLess::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

UEAElement unit() { return UEAElement(Word{}); }

UEAElement from_scalar(const Scalar& s) { return UEAElement(Word{}, s); }

UEAElement from_lie(const LieElement& a) {
    UEAElement r;
    for (const auto& [e, c] : a) r.add(Word{e}, c);
    return r;
}

UEAElement from_generator(Kind kind, int index) { return from_lie(generator(kind, index)); }

bool is_ordered(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

UEAElement multiply(const UEAElement& a, const UEAElement& b) {
    UEAElement r;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(w, ca * cb);
        }
    }
    return r;
}

// ---------------------------------------------------------------- rewriting

std::pair<std::size_t, std::size_t> rewrite_measure(const Word& w) {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t k = i + 1; k < w.size(); ++k)
            if (w[k] < w[i]) ++inv;
    return {w.size(), inv};
}

std::optional<RewriteStep> rewrite_step(const Word& w, RewriteStrategy strategy) {
    std::optional<std::size_t> pos;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i + 1] < w[i]) {
            pos = i;
            if (strategy == RewriteStrategy::LeftmostDescent) break;
        }
    }
    if (!pos) return std::nullopt;
    std::size_t i = *pos;
    RewriteStep step;
    step.position = i;
    step.swapped = w;
    std::swap(step.swapped[i], step.swapped[i + 1]);
    for (const auto& [e, c] : bracket(w[i], w[i + 1])) {
        Word t(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        t.push_back(e);
        t.insert(t.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
        step.bracket_terms.emplace_back(std::move(t), c);
    }
    return step;
}

namespace {

void sort_kind_runs(Word& w) {
    std::size_t start = 0;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        if (i == w.size() || w[i].kind != w[start].kind) {
            std::sort(w.begin() + static_cast<std::ptrdiff_t>(start), w.begin() + static_cast<std::ptrdiff_t>(i));
            start = i;
        }
    }
}

detail::Memo<Word, UEAElement> g_rewrite_memo[2];

UEAElement normal_form_word(Word w, RewriteStrategy strategy) {
    sort_kind_runs(w);
    if (is_ordered(w)) return UEAElement(w);
    auto& memo = g_rewrite_memo[static_cast<int>(strategy)];
    if (auto hit = memo.find(w)) return *hit;
    auto step = rewrite_step(w, strategy);
    UEAElement r = normal_form_word(step->swapped, strategy);
    for (const auto& [t, c] : step->bracket_terms) r.add_scaled(normal_form_word(t, strategy), c);
    memo.insert(w, r);
    return r;
}

}  // namespace

UEAElement pbw_normal_form(const UEAElement& a, RewriteStrategy strategy) {
    UEAElement r;
    for (const auto& [w, c] : a) {
        if (is_ordered(w))
            r.add(w, c);
        else
            r.add_scaled(normal_form_word(w, strategy), c);
    }
    return r;
}

// ---------------------------------------------------------------- structured product

namespace {

struct Blocks {
    std::size_t m_end;  // [0, m_end) holds x-
    std::size_t h_end;  // [m_end, h_end) holds h, the rest x+
};

Blocks blocks_of(const Word& w) {
    auto m = std::find_if(w.begin(), w.end(), [](const BasisElement& e) { return e.kind != Kind::XMinus; });
    auto h = std::find_if(m, w.end(), [](const BasisElement& e) { return e.kind == Kind::XPlus; });
    return {static_cast<std::size_t>(m - w.begin()), static_cast<std::size_t>(h - w.begin())};
}

void insert_sorted(Word& w, const BasisElement& e) { w.insert(std::upper_bound(w.begin(), w.end(), e), e); }

Word without(const Word& w, std::size_t i) {
    Word r = w;
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
    return r;
}

Word concat(const Word& a, const Word& b, const Word& c) {
    Word r;
    r.reserve(a.size() + b.size() + c.size());
    r.insert(r.end(), a.begin(), a.end());
    r.insert(r.end(), b.begin(), b.end());
    r.insert(r.end(), c.begin(), c.end());
    return r;
}

UEAElement left_multiply_h(const BasisElement& g, const Word& mm, const Word& hh, const Word& pp) {
    UEAElement r;
    Word h2 = hh;
    insert_sorted(h2, g);
    r.add(concat(mm, h2, pp), 1);
    for (std::size_t i = 0; i < mm.size(); ++i) {
        Word rest = without(mm, i);
        for (const auto& [e, c] : bracket(g, mm[i])) {
            Word m2 = rest;
            insert_sorted(m2, e);
            r.add(concat(m2, hh, pp), c);
        }
    }
    return r;
}

UEAElement left_multiply_xplus(const BasisElement& g, const Word& mm, const Word& hh, const Word& pp) {
    UEAElement r;
    // x+ H = sum over subsets S of H: (H \ S) * (prod_{s in S} -ad h_s)(x+)
    const std::size_t n = hh.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        LieElement y(g);
        Word rest;
        for (std::size_t s = 0; s < n; ++s) {
            if (mask & (std::size_t(1) << s))
                y = -bracket(LieElement(hh[s]), y);
            else
                rest.push_back(hh[s]);
        }
        for (const auto& [e, c] : y) {
            Word p2 = pp;
            insert_sorted(p2, e);
            r.add(concat(mm, rest, p2), c);
        }
    }
    // [x+, M-] H M+
    for (std::size_t i = 0; i < mm.size(); ++i) {
        LieElement ci = bracket(g, mm[i]);
        if (ci.is_zero()) continue;
        Word rest = without(mm, i);
        for (const auto& [e, c] : ci) {
            Word h2 = hh;
            insert_sorted(h2, e);
            r.add(concat(rest, h2, pp), c);
        }
        for (std::size_t k = i + 1; k < mm.size(); ++k) {
            Word rest2 = rest;
            rest2.erase(rest2.begin() + static_cast<std::ptrdiff_t>(k - 1));
            for (const auto& [e, c] : bracket(ci, LieElement(mm[k]))) {
                Word m2 = rest2;
                insert_sorted(m2, e);
                r.add(concat(m2, hh, pp), c);
            }
        }
    }
    return r;
}

detail::Memo<std::pair<BasisElement, Word>, UEAElement> g_lmul_memo;

}  // namespace

UEAElement left_multiply(const BasisElement& g, const Word& ordered) {
    if (!g.is_canonical()) throw DomainError("left_multiply: non-canonical generator " + to_string(g));
    auto key = std::make_pair(g, ordered);
    return g_lmul_memo.get(key, [&] {
        Blocks b = blocks_of(ordered);
        Word mm(ordered.begin(), ordered.begin() + static_cast<std::ptrdiff_t>(b.m_end));
        Word hh(ordered.begin() + static_cast<std::ptrdiff_t>(b.m_end),
                ordered.begin() + static_cast<std::ptrdiff_t>(b.h_end));
        Word pp(ordered.begin() + static_cast<std::ptrdiff_t>(b.h_end), ordered.end());
        switch (g.kind) {
            case Kind::XMinus: {
                Word m2 = mm;
                insert_sorted(m2, g);
                return UEAElement(concat(m2, hh, pp));
            }
            case Kind::H:
                return left_multiply_h(g, mm, hh, pp);
            case Kind::XPlus:
                return left_multiply_xplus(g, mm, hh, pp);
        }
        return UEAElement{};
    });
}

namespace {

bool all_ordered(const UEAElement& a) {
    return std::all_of(a.begin(), a.end(), [](const auto& t) { return is_ordered(t.first); });
}

const UEAElement& normalized(const UEAElement& a, UEAElement& storage) {
    if (all_ordered(a)) return a;
    storage = pbw_normal_form(a);
    return storage;
}

}  // namespace

UEAElement ordered_product(const UEAElement& a_in, const UEAElement& b_in) {
    UEAElement sa, sb;
    const UEAElement& a = normalized(a_in, sa);
    const UEAElement& b = normalized(b_in, sb);
    UEAElement r;
    for (const auto& [wa, ca] : a) {
        UEAElement cur = b;
        for (auto it = wa.rbegin(); it != wa.rend(); ++it) {
            UEAElement next;
            for (const auto& [w, c] : cur) next.add_scaled(left_multiply(*it, w), c);
            cur = std::move(next);
        }
        r.add_scaled(cur, ca);
    }
    return r;
}

UEAElement commutator(const UEAElement& a, const UEAElement& b) { return ordered_product(a, b) - ordered_product(b, a); }

int degree(const UEAElement& a_in) {
    UEAElement s;
    const UEAElement& a = normalized(a_in, s);
    if (a.is_zero()) return kDegreeOfZero;
    return static_cast<int>(a.terms().rbegin()->first.size());
}

UEAElement top_degree_part(const UEAElement& a_in) {
    UEAElement s;
    const UEAElement& a = normalized(a_in, s);
    UEAElement r;
    if (a.is_zero()) return r;
    std::size_t d = a.terms().rbegin()->first.size();
    for (const auto& [w, c] : a)
        if (w.size() == d) r.add(w, c);
    return r;
}

UEAElement divided_power(const UEAElement& a, int k) {
    if (k < 0) return {};
    UEAElement r = unit();
    for (int i = 1; i <= k; ++i) r = ordered_product(r, a) * Scalar(1, i);
    return r;
}

UEAElement binomial(const UEAElement& a, int k) {
    if (k < 0) return {};
    UEAElement r = unit();
    for (int i = 0; i < k; ++i) r = ordered_product(r, a - from_scalar(i)) * Scalar(1, i + 1);
    return r;
}

bool equal(const UEAElement& a, const UEAElement& b) { return pbw_normal_form(a - b).is_zero(); }

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += to_string(w[i]);
    }
    return s;
}

std::string to_string(const UEAElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        Scalar c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (it->first.empty()) {
            out += to_string(c);
        } else {
            if (c != 1) out += to_string(c) + "*";
            out += to_string(it->first);
        }
    }
    return out;
}

}  // namespace onsager
