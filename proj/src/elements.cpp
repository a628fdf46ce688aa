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

#include "onsager/elements.hpp"

#include <fmt/format.h>

#include <tuple>
#include <vector>

#include "onsager/detail/memo.hpp"

namespace onsager {

namespace {

void require_positive(int v, const char* what) {
    if (v < 1) throw DomainError(fmt::format("{} must be >= 1, got {}", what, v));
}

void require_nonnegative(int v, const char* what) {
    if (v < 0) throw DomainError(fmt::format("{} must be >= 0, got {}", what, v));
}

Scalar alternating(int e) { return (e % 2 == 0) ? Scalar(1) : Scalar(-1); }

detail::Memo<std::tuple<int, int, int, int>, LieElement> g_d1_memo;
detail::Memo<std::tuple<int, int, int>, UEAElement> g_lambda_memo;
detail::Memo<std::tuple<int, int, int, int, int>, UEAElement> g_duv_memo;

}  // namespace

LieElement lambda1(int a, int b) { return generator(Kind::H, a - b) - generator(Kind::H, a + b); }

LieElement d1_rec(Sign sign, int u, int j, int l) {
    require_nonnegative(u, "u");
    require_positive(j, "j");
    require_positive(l, "l");
    if (u == 0) return sign == Sign::Plus ? generator(Kind::XPlus, j) : generator(Kind::XMinus, l);
    return g_d1_memo.get({sign_value(sign), u, j, l}, [&] {
        return bracket(d1_rec(sign, u - 1, j, l), lambda1(j, l)) * rational(sign_value(sign), 2);
    });
}

LieElement d1_closed(Sign sign, int u, int j, int l) {
    require_nonnegative(u, "u");
    require_positive(j, "j");
    require_positive(l, "l");
    const Kind kind = kind_of(sign);
    // the minus formula is the plus formula transported by tau with j and l switched
    const int a = sign == Sign::Plus ? j : l;
    const int b = sign == Sign::Plus ? l : j;
    LieElement r;
    for (int k = 0; k <= (u - 1) / 2 && u >= 1; ++k)
        for (int i = 0; i <= u + 1; ++i)
            r.add_scaled(generator(kind, (u + 1 - 2 * i) * a + (u - 2 * k) * b),
                         alternating(k + i) * binomial(u, k) * binomial(u + 1, i));
    if (u % 2 == 0)
        for (int i = 0; i <= u / 2; ++i)
            r.add_scaled(generator(kind, (u + 1 - 2 * i) * a),
                         alternating(u / 2 + i) * binomial(u, u / 2) * binomial(u + 1, i));
    return r;
}

LieElement p_def(int k, int j, int l) {
    require_positive(k, "k");
    return bracket(generator(Kind::XPlus, j), d1_rec(Sign::Minus, k - 1, j, l));
}

LieElement p_closed(int u, int j, int l) {
    require_positive(u, "u");
    require_positive(j, "j");
    require_positive(l, "l");
    LieElement r;
    for (int k = 0; k <= (u - 1) / 2; ++k)
        for (int i = 0; i <= u; ++i)
            r.add_scaled(generator(Kind::H, (u - 2 * i) * j + (u - 2 * k) * l),
                         alternating(k + i) * binomial(u, k) * binomial(u, i));
    if (u % 2 == 0)
        for (int i = 0; i <= u; ++i)
            r.add_scaled(generator(Kind::H, (u - 2 * i) * j),
                         alternating(u / 2 + i) * binomial(u - 1, (u - 2) / 2) * binomial(u, i));
    return r;
}

LieElement bracket_x_lambda1(int k, int j, int l) {
    require_positive(k, "k");
    require_positive(j, "j");
    require_positive(l, "l");
    LieElement r = generator(Kind::XPlus, k + j + l) + generator(Kind::XPlus, k - j - l);
    r -= generator(Kind::XPlus, k + j - l);
    r -= generator(Kind::XPlus, k - j + l);
    return r * Scalar(2);
}

UEAElement lambda_rec(int j, int l, int k) {
    if (k < 0) return {};
    if (k == 0) return unit();
    if (k == 1) return from_lie(lambda1(j, l));
    require_positive(j, "j");
    require_positive(l, "l");
    return g_lambda_memo.get({j, l, k}, [&] {
        UEAElement r;
        for (int i = 1; i <= k; ++i) r += ordered_product(from_lie(p_def(i, j, l)), lambda_rec(j, l, k - i));
        return r * rational(-1, k);
    });
}

UEAElement lambda_series(int j, int l, int k) {
    if (k < 0) return {};
    if (k == 0) return unit();
    if (k >= 2) {
        require_positive(j, "j");
        require_positive(l, "l");
    }
    // A(u) = -sum_{s=1}^k p_s u^s / s, truncated at u^k
    std::vector<UEAElement> a(static_cast<std::size_t>(k + 1));
    for (int s = 1; s <= k; ++s) {
        LieElement ps = s == 1 ? -lambda1(j, l) : p_def(s, j, l);
        a[static_cast<std::size_t>(s)] = from_lie(ps) * rational(-1, s);
    }
    // exp(A) coefficient of u^k: sum_n [u^k] A^n / n!
    std::vector<UEAElement> power(static_cast<std::size_t>(k + 1));
    power[0] = unit();
    UEAElement result;
    for (int n = 1; n <= k; ++n) {
        std::vector<UEAElement> next(static_cast<std::size_t>(k + 1));
        for (int x = 0; x <= k; ++x) {
            if (power[static_cast<std::size_t>(x)].is_zero()) continue;
            for (int s = 1; x + s <= k; ++s)
                next[static_cast<std::size_t>(x + s)] +=
                    ordered_product(power[static_cast<std::size_t>(x)], a[static_cast<std::size_t>(s)]);
        }
        power = std::move(next);
        result.add_scaled(power[static_cast<std::size_t>(k)], Scalar(1) / factorial(n));
    }
    return result;
}

LieElement d_triple(Sign sign, int u, int j, int k, int m) {
    require_nonnegative(u, "u");
    require_positive(j, "j");
    require_positive(k, "k");
    require_positive(m, "m");
    LieElement r;
    for (int n = 0; n <= u; ++n)
        for (int v = 0; v <= u; ++v)
            r.add_scaled(generator(kind_of(sign), j + (u - 2 * n) * k + (u - 2 * v) * m),
                         alternating(n + v) * binomial(u, n) * binomial(u, v));
    return r;
}

UEAElement divided_power_multinomial(const LieElement& a, int k) {
    if (k < 0) return {};
    std::vector<std::pair<BasisElement, Scalar>> terms(a.begin(), a.end());
    for (std::size_t i = 1; i < terms.size(); ++i)
        if (!bracket(terms[0].first, terms[i].first).is_zero())
            throw DomainError("divided_power_multinomial: terms do not commute");
    UEAElement result;
    // distribute k among the terms; each y^(n) is the word y...y with 1/n!
    std::vector<int> share(terms.size(), 0);
    auto emit = [&] {
        Word w;
        Scalar c(1);
        for (std::size_t i = 0; i < terms.size(); ++i) {
            for (int t = 0; t < share[i]; ++t) {
                w.push_back(terms[i].first);
                c *= terms[i].second;
            }
            c /= factorial(share[i]);
        }
        result.add(w, c);
    };
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == terms.size()) {
            share[i] = left;
            emit();
            return;
        }
        for (int n = left; n >= 0; --n) {
            share[i] = n;
            self(self, i + 1, left - n);
        }
    };
    if (terms.empty()) return k == 0 ? unit() : UEAElement{};
    rec(rec, 0, k);
    return result;
}

namespace {

UEAElement duv_recursion(Sign sign, int u, int v, int j, int l) {
    if (v < 0 || u < 0) return {};
    if (v == 0) return u == 0 ? unit() : UEAElement{};
    return g_duv_memo.get({sign_value(sign), u, v, j, l}, [&] {
        UEAElement r;
        for (int i = 0; i <= u; ++i)
            r += ordered_product(from_lie(d1_rec(sign, i, j, l)), duv_recursion(sign, u - i, v - 1, j, l));
        return r * rational(1, v);
    });
}

UEAElement duv_multinomial(Sign sign, int u, int v, int j, int l) {
    if (v < 0) return {};
    if (v == 0) return u == 0 ? unit() : UEAElement{};
    UEAElement result;
    // k_0 + ... + k_u = v and sum i k_i = u
    std::vector<int> ks(static_cast<std::size_t>(u + 1), 0);
    auto rec = [&](auto&& self, int i, int left_v, int left_u) -> void {
        if (i < 0) {
            if (left_v != 0 || left_u != 0) return;
            UEAElement prod = unit();
            for (int t = 0; t <= u; ++t) {
                int kt = ks[static_cast<std::size_t>(t)];
                if (kt) prod = ordered_product(prod, divided_power_multinomial(d1_closed(sign, t, j, l), kt));
            }
            result += prod;
            return;
        }
        for (int n = 0; n <= left_v && (i == 0 ? 0 : i * n) <= left_u; ++n) {
            ks[static_cast<std::size_t>(i)] = n;
            self(self, i - 1, left_v - n, left_u - i * n);
        }
        ks[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, u, v, u);
    return result;
}

UEAElement duv_series(Sign sign, int u, int v, int j, int l) {
    if (v < 0) return {};
    if (v == 0) return u == 0 ? unit() : UEAElement{};
    const int top = u + v;
    // S(w) = sum_{m=0}^u D_{m,1} w^{m+1}
    std::vector<UEAElement> s(static_cast<std::size_t>(top + 1));
    for (int m = 0; m <= u && m + 1 <= top; ++m) s[static_cast<std::size_t>(m + 1)] = from_lie(d1_rec(sign, m, j, l));
    std::vector<UEAElement> power(static_cast<std::size_t>(top + 1));
    power[0] = unit();
    for (int n = 1; n <= v; ++n) {
        std::vector<UEAElement> next(static_cast<std::size_t>(top + 1));
        for (int x = 0; x <= top; ++x) {
            if (power[static_cast<std::size_t>(x)].is_zero()) continue;
            for (int y = 1; x + y <= top; ++y)
                if (!s[static_cast<std::size_t>(y)].is_zero())
                    next[static_cast<std::size_t>(x + y)] +=
                        ordered_product(power[static_cast<std::size_t>(x)], s[static_cast<std::size_t>(y)]);
        }
        power = std::move(next);
    }
    return power[static_cast<std::size_t>(top)] * (Scalar(1) / factorial(v));
}

}  // namespace

UEAElement duv(Sign sign, int u, int v, int j, int l, DuvMethod method) {
    require_nonnegative(u, "u");
    require_positive(j, "j");
    require_positive(l, "l");
    switch (method) {
        case DuvMethod::Recursion:
            return duv_recursion(sign, u, v, j, l);
        case DuvMethod::Multinomial:
            return duv_multinomial(sign, u, v, j, l);
        case DuvMethod::Series:
            return duv_series(sign, u, v, j, l);
    }
    return {};
}

}  // namespace onsager
