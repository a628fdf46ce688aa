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

#include "onsager/straightening.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <iterator>
#include <limits>
#include <map>
#include <memory>
#include <tuple>

#include "onsager/detail/memo.hpp"
#include "onsager/linalg.hpp"

namespace onsager {

std::strong_ordering operator<=>(const MFactor& a, const MFactor& b) {
    if (auto c = a.block() <=> b.block(); c != 0) return c;
    if (a.is_lambda()) {
        const auto& x = a.as_lambda();
        const auto& y = b.as_lambda();
        return std::tie(x.j, x.l, x.order) <=> std::tie(y.j, y.l, y.order);
    }
    const auto& x = a.as_x();
    const auto& y = b.as_x();
    return std::tie(x.index, x.order) <=> std::tie(y.index, y.order);
}

// ---------------------------------------------------------------- basics

int mdegree(const MWord& m) {
    int d = 0;
    for (const auto& f : m) d += f.order();
    return d;
}

namespace {

bool in_family(int j, int l, LambdaFamily family) {
    if (family == LambdaFamily::Primitive) return j >= 1 && l == 1;
    return j >= l && l >= 1;
}

std::pair<int, int> lambda_pair(const MFactor& f) { return {f.as_lambda().j, f.as_lambda().l}; }

}  // namespace

bool is_canonical(const MWord& m, LambdaFamily family) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].order() < 1) return false;
        if (m[i].is_lambda()) {
            if (!in_family(m[i].as_lambda().j, m[i].as_lambda().l, family)) return false;
        } else if (m[i].as_x().index < 1) {
            return false;
        }
        if (i == 0) continue;
        const MFactor& a = m[i - 1];
        const MFactor& b = m[i];
        if (a.block() > b.block()) return false;
        if (a.block() < b.block()) continue;
        if (a.is_lambda()) {
            if (lambda_pair(a) >= lambda_pair(b)) return false;
        } else if (a.as_x().index >= b.as_x().index) {
            return false;
        }
    }
    return true;
}

int factor_index(const MFactor& f) { return f.is_lambda() ? f.as_lambda().j : f.as_x().index; }

namespace {

detail::Memo<MWord, UEAElement> g_expand_memo;

UEAElement divided_power_word(Kind kind, int index, int order) {
    Word w(static_cast<std::size_t>(order), BasisElement{kind, index});
    return UEAElement(w, Scalar(1) / factorial(order));
}

}  // namespace

UEAElement expand(const MFactor& f) {
    if (f.order() < 0) return {};
    if (f.is_lambda()) return lambda(f.as_lambda().j, f.as_lambda().l, f.as_lambda().order);
    const auto& x = f.as_x();
    if (x.index < 1) throw DomainError("divided power of non-canonical generator");
    return divided_power_word(kind_of(x.sign), x.index, x.order);
}

UEAElement expand(const MWord& m) {
    if (m.empty()) return unit();
    if (m.size() == 1) return expand(m.front());
    return g_expand_memo.get(m, [&] {
        MWord rest(m.begin() + 1, m.end());
        return ordered_product(expand(m.front()), expand(rest));
    });
}

UEAElement expand(const MForm& a) {
    UEAElement r;
    for (const auto& [w, c] : a) r.add_scaled(expand(w), c);
    return r;
}

MForm product(const MForm& a, const MForm& b) {
    MForm r;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            MWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(w, ca * cb);
        }
    }
    return r;
}

namespace {

MForm single(MFactor f) {
    if (f.order() == 0) return MForm(MWord{});
    if (f.order() < 0) return {};
    return MForm(MWord{f});
}

// (sum c_a x_a)^{(k)} for a one-signed combination, expanded multinomially
MForm dp_mform(const LieElement& a, int k) {
    if (k < 0) return {};
    if (k == 0) return MForm(MWord{});
    std::vector<std::pair<BasisElement, Scalar>> terms(a.begin(), a.end());
    for (const auto& t : terms)
        if (t.first.kind == Kind::H || t.first.kind != terms[0].first.kind)
            throw DomainError("dp_mform: expected a one-signed combination of x generators");
    MForm result;
    std::vector<int> share(terms.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == terms.size()) {
            share[i] = left;
            MWord w;
            Scalar c(1);
            for (std::size_t t = 0; t < terms.size(); ++t) {
                if (share[t] == 0) continue;
                Sign s = terms[t].first.kind == Kind::XPlus ? Sign::Plus : Sign::Minus;
                w.push_back(MFactor::x(s, terms[t].first.index, share[t]));
                for (int e = 0; e < share[t]; ++e) c *= terms[t].second;
            }
            result.add(w, c);
            return;
        }
        for (int n = left; n >= 0; --n) {
            share[i] = n;
            self(self, i + 1, left - n);
        }
    };
    if (!terms.empty()) rec(rec, 0, k);
    return result;
}

// sum over compositions of prod_u ((u+1) D_u(j,k,m))^{(v_u)}
MForm triple_products(Sign sign, int j, int k, int m, int r, int i) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    // weight i spread over slots 0..i
    std::function<void(int, int, int)> rec = [&](int u, int total, int weight) {
        if (u > i) {
            if (total == 0 && weight == 0) comps.push_back(cur);
            return;
        }
        for (int v = 0; v <= total && u * v <= weight; ++v) {
            cur.push_back(v);
            rec(u + 1, total - v, weight - u * v);
            cur.pop_back();
        }
    };
    rec(0, r, i);
    MForm result;
    for (const auto& vs : comps) {
        MForm term(MWord{});
        for (int u = 0; u < static_cast<int>(vs.size()); ++u) {
            if (vs[static_cast<std::size_t>(u)] == 0) continue;
            LieElement d = d_triple(sign, u, j, k, m) * Scalar(u + 1);
            term = product(term, dp_mform(d, vs[static_cast<std::size_t>(u)]));
        }
        result += term;
    }
    return result;
}

}  // namespace

MForm duv_mform(Sign sign, int u, int v, int j, int l) {
    if (v < 0 || u < 0) return {};
    if (v == 0) return u == 0 ? MForm(MWord{}) : MForm{};
    MForm result;
    std::vector<int> ks(static_cast<std::size_t>(u + 1), 0);
    auto rec = [&](auto&& self, int i, int left_v, int left_u) -> void {
        if (i < 0) {
            if (left_v != 0 || left_u != 0) return;
            MForm prod(MWord{});
            for (int t = 0; t <= u; ++t)
                if (int kt = ks[static_cast<std::size_t>(t)])
                    prod = product(prod, dp_mform(d1_closed(sign, t, j, l), kt));
            result += prod;
            return;
        }
        for (int n = 0; n <= left_v && i * n <= left_u; ++n) {
            ks[static_cast<std::size_t>(i)] = n;
            self(self, i - 1, left_v - n, left_u - i * n);
        }
        ks[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, u, v, u);
    return result;
}

std::pair<Scalar, MFactor> straighten_same_x(Sign sign, int j, int r, int s) {
    if (r < 0 || s < 0) throw DomainError("straighten_same_x: negative order");
    return {binomial(r + s, s), MFactor::x(sign, j, r + s)};
}

MForm straighten_plus_minus(int j, int r, int l, int s) {
    if (r < 0 || s < 0) throw DomainError("straighten_plus_minus: negative order");
    MForm result;
    const int top = std::min(r, s);
    for (int m = 0; m <= top; ++m) {
        for (int n = 0; m + n <= top; ++n) {
            for (int q = 0; m + n + q <= top; ++q) {
                MForm minus = duv_mform(Sign::Minus, m, s - m - n - q, j, l);
                MForm plus = duv_mform(Sign::Plus, q, r - m - n - q, j, l);
                if (minus.is_zero() || plus.is_zero()) continue;
                MForm t = product(product(minus, single(MFactor::lam(j, l, n))), plus);
                result.add_scaled(t, ((m + n + q) % 2) ? Scalar(-1) : Scalar(1));
            }
        }
    }
    return result;
}

MForm move_x_past_lambda(LambdaSide side, int x_index, int r, int k, int m, int n) {
    if (r < 0 || n < 0) throw DomainError("move_x_past_lambda: negative order");
    MForm result;
    const Sign sign = side == LambdaSide::PlusLeft ? Sign::Plus : Sign::Minus;
    for (int i = 0; i <= n; ++i) {
        MForm lam = single(MFactor::lam(k, m, n - i));
        MForm xs = triple_products(sign, x_index, k, m, r, i);
        result += side == LambdaSide::PlusLeft ? product(lam, xs) : product(xs, lam);
    }
    return result;
}

// ---------------------------------------------------------------- Lambda solves

namespace {

// canonical pairs with first entry <= max_index, ascending
std::vector<std::pair<int, int>> family_pairs(int max_index, LambdaFamily family) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j <= max_index; ++j) {
        if (family == LambdaFamily::Primitive) {
            pairs.emplace_back(j, 1);
        } else {
            for (int l = 1; l <= j; ++l) pairs.emplace_back(j, l);
        }
    }
    return pairs;
}

// Lambda-only canonical words with mdegree <= max_degree
std::vector<MWord> lambda_monomials(int max_degree, int max_index, LambdaFamily family) {
    const auto pairs = family_pairs(max_index, family);
    std::vector<MWord> out;
    MWord cur;
    auto rec = [&](auto&& self, std::size_t p, int left) -> void {
        if (p == pairs.size()) {
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            if (k) cur.push_back(MFactor::lam(pairs[p].first, pairs[p].second, k));
            self(self, p + 1, left - k);
            if (k) cur.pop_back();
        }
    };
    rec(rec, 0, max_degree);
    return out;
}

struct LambdaSolver {
    std::vector<MWord> candidates;
    EchelonForm<Word, GradedLexLess> echelon;
};

detail::Memo<std::tuple<int, int, int>, std::shared_ptr<const LambdaSolver>> g_solver_memo;

std::shared_ptr<const LambdaSolver> lambda_solver(LambdaFamily family, int max_index, int max_degree) {
    return g_solver_memo.get({static_cast<int>(family), max_index, max_degree}, [&] {
        auto s = std::make_shared<LambdaSolver>();
        s->candidates = lambda_monomials(max_degree, max_index, family);
        for (const auto& w : s->candidates) s->echelon.insert(expand(w));
        return std::shared_ptr<const LambdaSolver>(std::move(s));
    });
}

MForm kernel_to_mform(const LambdaSolver& s) {
    MForm k;
    for (const auto& [i, c] : s.echelon.kernel().front()) k.add(s.candidates[i], c);
    return k;
}

int max_h_index(const UEAElement& q) {
    int m = 0;
    for (const auto& [w, c] : q)
        for (const auto& e : w)
            if (e.kind == Kind::H) m = std::max(m, e.index);
    return m;
}

/*
 * Polynomials in h_0, h_1 and e_a = h_{a-1} - h_{a+1} = Lambda_{a,1,1}, a >= 1.
 * This is a linear change of variables on the h-polynomial ring. Variables
 * are ints: -2 for h_0, -1 for h_1, a for e_a; monomials are sorted.
 */
using EMonomial = std::vector<int>;

struct EMonomialLess {
    bool operator()(const EMonomial& a, const EMonomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using EPoly = LinearCombination<EMonomial, Scalar, EMonomialLess>;

EPoly epoly_mul(const EPoly& a, const EPoly& b) {
    EPoly r;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            EMonomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            r.add(m, ca * cb);
        }
    }
    return r;
}

// h_k = h_{k mod 2} - e_{k-1} - e_{k-3} - ...
EPoly h_in_e(int k) {
    EPoly r(EMonomial{k % 2 == 0 ? -2 : -1});
    for (int a = k - 1; a >= 1; a -= 2) r.add(EMonomial{a}, Scalar(-1));
    return r;
}

EPoly to_epoly(const UEAElement& q) {
    EPoly r;
    for (const auto& [w, c] : q) {
        EPoly t(EMonomial{}, c);
        for (const auto& e : w) {
            if (e.kind != Kind::H) throw DomainError("to_epoly: expected an h-polynomial");
            t = epoly_mul(t, h_in_e(e.index));
        }
        r += t;
    }
    return r;
}

detail::Memo<std::pair<int, int>, EPoly> g_lambda_epoly_memo;

EPoly lambda_epoly(int a, int k) {
    return g_lambda_epoly_memo.get({a, k}, [&] { return to_epoly(lambda(a, 1, k)); });
}

/*
 * Exact expansion of an h-polynomial in Primitive Lambda monomials. The top
 * homogeneous part of Lambda_{a1,1,k1}...Lambda_{ar,1,kr} is the single
 * monomial e_a1^k1...e_ar^kr / (k1!...kr!), so peeling the largest monomial
 * is triangular and terminates. Throws NoLambdaExpression when h_0 or h_1
 * survive the change of variables.
 */
MForm solve_primitive(const UEAElement& q) {
    EPoly f = to_epoly(q);
    for (const auto& [m, c] : f)
        if (!m.empty() && m.front() < 0)
            throw NoLambdaExpression("h-part " + to_string(q) + " is outside the span of Lambda monomials");
    MForm out;
    while (!f.is_zero()) {
        const EMonomial m = f.terms().rbegin()->first;
        const Scalar c = f.terms().rbegin()->second;
        MWord word;
        Scalar scale = c;
        EPoly prod(EMonomial{});
        for (std::size_t i = 0; i < m.size();) {
            std::size_t k = i;
            while (k < m.size() && m[k] == m[i]) ++k;
            const int order = static_cast<int>(k - i);
            word.push_back(MFactor::lam(m[i], 1, order));
            scale *= factorial(order);
            prod = epoly_mul(prod, lambda_epoly(m[i], order));
            i = k;
        }
        out.add(word, scale);
        f.add_scaled(prod, -scale);
        // holds for the true structure constants; guards against corrupted ones
        if (!f.is_zero() && !EMonomialLess{}(f.terms().rbegin()->first, m))
            throw NoLambdaExpression("Lambda expansion is not triangular at " + to_string(word));
    }
    return out;
}

// q: h-only polynomial. Throws OutOfTruncation if q is not in the span.
MForm solve_h(const UEAElement& q, int max_index, int max_degree, LambdaFamily family) {
    if (q.is_zero()) return {};
    if (family == LambdaFamily::Primitive) {
        MForm r;
        try {
            r = solve_primitive(q);
        } catch (const NoLambdaExpression& e) {
            throw OutOfTruncation(e.what());
        }
        for (const auto& [w, c] : r) {
            for (const auto& f : w)
                if (factor_index(f) > max_index)
                    throw OutOfTruncation(fmt::format("h-part {} needs {} beyond max_index {}", to_string(q),
                                                      to_string(f), max_index));
            if (mdegree(w) > max_degree)
                throw OutOfTruncation(fmt::format("h-part {} needs mdegree {} beyond {}", to_string(q), mdegree(w),
                                                  max_degree));
        }
        return r;
    }
    auto s = lambda_solver(family, max_index, max_degree);
    if (!s->echelon.kernel().empty())
        throw AmbiguousSolution(fmt::format("Lambda monomials of mdegree <= {} with index <= {} are dependent",
                                            max_degree, max_index),
                                kernel_to_mform(*s));
    auto [combo, remainder] = s->echelon.reduce(q);
    if (!remainder.is_zero())
        throw OutOfTruncation(fmt::format("h-part {} is outside the span of Lambda monomials (mdegree <= {}, index <= {})",
                                          to_string(remainder), max_degree, max_index));
    MForm r;
    for (const auto& [i, c] : combo) r.add(s->candidates[i], c);
    return r;
}

// Primitive: exact peeling. AllPairs: index bound widened until the support is covered.
MForm solve_h_adaptive(const UEAElement& q, int max_degree, LambdaFamily family) {
    if (family == LambdaFamily::Primitive) return solve_primitive(q);
    const int start = std::max(1, max_h_index(q) - 1);
    for (int idx = start; idx <= 2 * start + 2; ++idx) {
        try {
            return solve_h(q, idx, max_degree, family);
        } catch (const OutOfTruncation&) {
        }
    }
    throw NoLambdaExpression("no expression in Lambda monomials for " + to_string(q));
}

detail::Memo<std::tuple<int, int, int, int>, MForm> g_rebase_memo;
detail::Memo<std::tuple<int, int, int, int, int>, MForm> g_merge_memo;

}  // namespace

MForm rebase_lambda(int j, int l, int k, LambdaFamily family) {
    if (k < 0) return {};
    if (k == 0) return MForm(MWord{});
    if (in_family(j, l, family)) return MForm(MWord{MFactor::lam(j, l, k)});
    return g_rebase_memo.get({j, l, k, static_cast<int>(family)}, [&] {
        UEAElement q = lambda(j, l, k);
        return solve_h_adaptive(q, std::max(0, degree(q)), family);
    });
}

MForm merge_lambda_pair(int j, int l, int k, int m, LambdaFamily family) {
    if (k < 1 || m < 1) throw DomainError("merge_lambda_pair: orders must be >= 1");
    return g_merge_memo.get({j, l, k, m, static_cast<int>(family)}, [&] {
        const Scalar lead = binomial(k + m, k);
        UEAElement residual = ordered_product(lambda(j, l, k), lambda(j, l, m)) - lambda(j, l, k + m) * lead;
        MForm r(MWord{MFactor::lam(j, l, k + m)}, lead);
        if (!residual.is_zero()) {
            const int d = degree(residual);
            if (d >= k + m) throw NoLambdaExpression("merge_lambda_pair: residual not of lower degree");
            r += solve_h_adaptive(residual, d, family);
        }
        return r;
    });
}

// ---------------------------------------------------------------- normalization

namespace {

MForm splice(const MWord& w, std::size_t at, std::size_t len, const MForm& mid) {
    MWord prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(at));
    MWord suffix(w.begin() + static_cast<std::ptrdiff_t>(at + len), w.end());
    return product(product(MForm(prefix), mid), MForm(suffix));
}

// One rewrite of w; false if w is already canonical.
bool rewrite_once(const MWord& w, LambdaFamily family, MForm& out) {
    // drop units, kill negative orders, orient Lambda pairs
    bool changed = false;
    MWord clean;
    for (const auto& f : w) {
        if (f.order() < 0) {
            out = MForm{};
            return true;
        }
        if (f.order() == 0) {
            changed = true;
            continue;
        }
        if (f.is_lambda() && f.as_lambda().j < f.as_lambda().l && f.as_lambda().j >= 1) {
            clean.push_back(MFactor::lam(f.as_lambda().l, f.as_lambda().j, f.as_lambda().order));
            changed = true;
            continue;
        }
        clean.push_back(f);
    }
    if (changed) {
        out = MForm(clean);
        return true;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!w[i].is_lambda()) continue;
        const auto& lf = w[i].as_lambda();
        if (!in_family(lf.j, lf.l, family)) {
            out = splice(w, i, 1, rebase_lambda(lf.j, lf.l, lf.order, family));
            return true;
        }
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const MFactor& a = w[i];
        const MFactor& b = w[i + 1];
        if (a.block() > b.block()) {
            MForm mid;
            if (a.block() == 2 && b.block() == 0) {
                mid = straighten_plus_minus(a.as_x().index, a.as_x().order, b.as_x().index, b.as_x().order);
            } else if (a.block() == 2) {
                const auto& lf = b.as_lambda();
                mid = move_x_past_lambda(LambdaSide::PlusLeft, a.as_x().index, a.as_x().order, lf.j, lf.l, lf.order);
            } else {
                const auto& lf = a.as_lambda();
                mid = move_x_past_lambda(LambdaSide::MinusRight, b.as_x().index, b.as_x().order, lf.j, lf.l, lf.order);
            }
            out = splice(w, i, 2, mid);
            return true;
        }
        if (a.block() < b.block()) continue;
        if (a.is_lambda()) {
            const auto pa = lambda_pair(a), pb = lambda_pair(b);
            if (pa < pb) continue;
            if (pa > pb) {
                out = splice(w, i, 2, MForm(MWord{b, a}));
            } else {
                out = splice(w, i, 2, merge_lambda_pair(pa.first, pa.second, a.order(), b.order(), family));
            }
            return true;
        }
        const auto& xa = a.as_x();
        const auto& xb = b.as_x();
        if (xa.index < xb.index) continue;
        if (xa.index > xb.index) {
            out = splice(w, i, 2, MForm(MWord{b, a}));
        } else {
            auto [c, f] = straighten_same_x(xa.sign, xa.index, xa.order, xb.order);
            out = splice(w, i, 2, MForm(MWord{f}, c));
        }
        return true;
    }
    return false;
}

}  // namespace

MForm normalize_to_basis(const MForm& a, LambdaFamily family) {
    MForm pending = a;
    MForm done;
    while (!pending.is_zero()) {
        // largest mdegree first lets equal words merge before being rewritten
        auto pick = pending.begin();
        for (auto it = pending.begin(); it != pending.end(); ++it)
            if (mdegree(it->first) > mdegree(pick->first)) pick = it;
        const MWord w = pick->first;
        const Scalar c = pick->second;
        pending.add(w, -c);
        MForm rewritten;
        if (rewrite_once(w, family, rewritten))
            pending.add_scaled(rewritten, c);
        else
            done.add(w, c);
    }
    return done;
}

std::vector<MWord> enumerate_basis(int max_mdegree, int max_index, LambdaFamily family) {
    std::vector<MFactor> slots;
    for (int l = 1; l <= max_index; ++l) slots.push_back(MFactor::x(Sign::Minus, l, 1));
    for (const auto& [j, l] : family_pairs(max_index, family)) slots.push_back(MFactor::lam(j, l, 1));
    for (int j = 1; j <= max_index; ++j) slots.push_back(MFactor::x(Sign::Plus, j, 1));

    auto with_order = [](const MFactor& f, int k) {
        if (f.is_lambda()) return MFactor::lam(f.as_lambda().j, f.as_lambda().l, k);
        return MFactor::x(f.as_x().sign, f.as_x().index, k);
    };
    std::vector<MWord> out;
    MWord cur;
    auto rec = [&](auto&& self, std::size_t s, int left) -> void {
        if (s == slots.size()) {
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            if (k) cur.push_back(with_order(slots[s], k));
            self(self, s + 1, left - k);
            if (k) cur.pop_back();
        }
    };
    rec(rec, 0, std::max(0, max_mdegree));
    std::sort(out.begin(), out.end(), [](const MWord& a, const MWord& b) {
        int da = mdegree(a), db = mdegree(b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

// ---------------------------------------------------------------- coordinates

int required_index(const UEAElement& a) {
    MForm c;
    try {
        c = coordinates(a, {std::numeric_limits<int>::max(), std::numeric_limits<int>::max()});
    } catch (const OutOfTruncation& e) {
        throw NoLambdaExpression(e.what());
    }
    int idx = 0;
    for (const auto& [w, coeff] : c)
        for (const auto& f : w) idx = std::max(idx, factor_index(f));
    return idx;
}

MForm coordinates(const UEAElement& a_in, Truncation bounds, LambdaFamily family) {
    UEAElement a = pbw_normal_form(a_in);
    // (x- word, x+ word) -> h polynomial
    std::map<std::pair<Word, Word>, UEAElement> blocks;
    for (const auto& [w, c] : a) {
        Word mm, hh, pp;
        for (const auto& e : w) (e.kind == Kind::XMinus ? mm : e.kind == Kind::H ? hh : pp).push_back(e);
        blocks[{mm, pp}].add(hh, c);
    }
    MForm result;
    for (const auto& [key, q] : blocks) {
        if (q.is_zero()) continue;
        const auto& [mm, pp] = key;
        MWord xm, xp;
        Scalar mult(1);
        auto collect = [&](const Word& word, Sign sign, MWord& out) {
            for (std::size_t i = 0; i < word.size();) {
                std::size_t k = i;
                while (k < word.size() && word[k] == word[i]) ++k;
                const int idx = word[i].index;
                const int n = static_cast<int>(k - i);
                if (idx > bounds.max_index)
                    throw OutOfTruncation(fmt::format("generator index {} exceeds max_index {}", idx, bounds.max_index));
                out.push_back(MFactor::x(sign, idx, n));
                mult *= factorial(n);
                i = k;
            }
        };
        collect(mm, Sign::Minus, xm);
        collect(pp, Sign::Plus, xp);
        const int xdeg = static_cast<int>(mm.size() + pp.size());
        const int hdeg = degree(q);
        if (xdeg + hdeg > bounds.max_mdegree)
            throw OutOfTruncation(fmt::format("term of mdegree {} exceeds max_mdegree {}", xdeg + hdeg, bounds.max_mdegree));
        // monomials above the h-degree cannot contribute: their top parts are independent
        MForm lam = solve_h(q, bounds.max_index, hdeg, family);
        for (const auto& [lw, c] : lam) {
            MWord w = xm;
            w.insert(w.end(), lw.begin(), lw.end());
            w.insert(w.end(), xp.begin(), xp.end());
            result.add(w, c * mult);
        }
    }
    return result;
}

IntegralityReport integrality_check(const UEAElement& a, Truncation bounds, LambdaFamily family) {
    IntegralityReport rep;
    try {
        rep.coordinates = coordinates(a, bounds, family);
    } catch (const OutOfTruncation& e) {
        rep.failure = std::string("OutOfTruncation: ") + e.what();
        return rep;
    } catch (const AmbiguousSolution& e) {
        rep.failure = std::string("AmbiguousSolution: ") + e.what();
        return rep;
    }
    for (const auto& [w, c] : rep.coordinates)
        if (!is_integer(c)) rep.non_integral.emplace_back(w, c);
    rep.integral = rep.non_integral.empty();
    return rep;
}

// ---------------------------------------------------------------- printing

std::string to_string(const MFactor& f) {
    if (f.is_lambda()) {
        const auto& l = f.as_lambda();
        return fmt::format("lam({},{},{})", l.j, l.l, l.order);
    }
    const auto& x = f.as_x();
    std::string g = fmt::format("{}({})", x.sign == Sign::Plus ? "xp" : "xm", x.index);
    return x.order == 1 ? g : fmt::format("dp({},{})", g, x.order);
}

std::string to_string(const MWord& m) {
    if (m.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += "*";
        s += to_string(m[i]);
    }
    return s;
}

std::string to_string(const MForm& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        Scalar c = it->second;
        const bool neg = c < 0;
        if (neg) c = -c;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
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
