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

#include "onsager/loop.hpp"

#include <fmt/format.h>

namespace onsager {

using Mat2 = std::array<std::array<GaussianRational, 2>, 2>;

namespace {

const GaussianRational kI = GaussianRational::i();
const GaussianRational kHalf(rational(1, 2));

// h^G = -i (x+ - x-), x^G_+- = 1/2 (x+ + x- -+ i h)
Mat2 h_gamma() { return {{{GaussianRational(0), -kI}, {kI, GaussianRational(0)}}}; }
Mat2 x_gamma_plus() { return {{{-kI * kHalf, kHalf}, {kHalf, kI * kHalf}}}; }
Mat2 x_gamma_minus() { return {{{kI * kHalf, kHalf}, {kHalf, -kI * kHalf}}}; }

Mat2 sl2_xplus() { return {{{GaussianRational(0), GaussianRational(1)}, {GaussianRational(0), GaussianRational(0)}}}; }
Mat2 sl2_xminus() { return {{{GaussianRational(0), GaussianRational(0)}, {GaussianRational(1), GaussianRational(0)}}}; }
Mat2 sl2_h() { return {{{GaussianRational(1), GaussianRational(0)}, {GaussianRational(0), GaussianRational(-1)}}}; }

LaurentPoly sym(int k) { return monomial(k) + monomial(-k); }
LaurentPoly antisym(int k) { return monomial(k) - monomial(-k); }

}  // namespace

std::string to_string(const GaussianRational& z) {
    auto imag = [](const Scalar& v) { return v == 1 ? std::string("i") : v == -1 ? std::string("-i") : to_string(v) + "*i"; };
    if (z.im == 0) return to_string(z.re);
    if (z.re == 0) return imag(z.im);
    Scalar mag = abs(z.im);
    return "(" + to_string(z.re) + (z.im < 0 ? " - " : " + ") + imag(mag) + ")";
}

LaurentPoly monomial(int k, GaussianRational c) { return LaurentPoly(k, c); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) r.add(ka + kb, ca * cb);
    return r;
}

LaurentPoly invert_t(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [k, c] : a) r.add(-k, c);
    return r;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        const auto& [k, c] = *it;
        if (k == 0)
            out += to_string(c);
        else if (c == GaussianRational(1))
            out += fmt::format("t^{}", k);
        else
            out += fmt::format("{}*t^{}", to_string(c), k);
    }
    return out;
}

LoopMatrix& LoopMatrix::operator+=(const LoopMatrix& o) {
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m[r][c] += o.m[r][c];
    return *this;
}

LoopMatrix& LoopMatrix::operator-=(const LoopMatrix& o) {
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m[r][c] -= o.m[r][c];
    return *this;
}

LoopMatrix operator*(const LoopMatrix& a, const GaussianRational& s) {
    LoopMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] * monomial(0, s);
    return r;
}

std::string to_string(const LoopMatrix& a) {
    return fmt::format("[[{}, {}], [{}, {}]]", to_string(a.m[0][0]), to_string(a.m[0][1]), to_string(a.m[1][0]),
                       to_string(a.m[1][1]));
}

LoopMatrix tensor(const Mat2& x, const LaurentPoly& p) {
    LoopMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = p * monomial(0, x[i][j]);
    return r;
}

LoopMatrix embed(const BasisElement& b) {
    switch (b.kind) {
        case Kind::H:
            return tensor(h_gamma(), sym(b.index));
        case Kind::XPlus:
            return tensor(x_gamma_plus(), antisym(b.index));
        case Kind::XMinus:
            return tensor(x_gamma_minus(), antisym(b.index));
    }
    return {};
}

LoopMatrix embed(const LieElement& a) {
    LoopMatrix r;
    for (const auto& [e, c] : a) r += embed(e) * GaussianRational(c);
    return r;
}

std::optional<LieElement> unembed(const LoopMatrix& a) {
    const auto& m = a.m;
    if (!(m[1][1] == LaurentPoly() - m[0][0])) return std::nullopt;
    // a = hG part, b = xG+ part, c = xG- part
    LaurentPoly off = m[0][1] + m[1][0];
    LaurentPoly diag = m[0][0] * monomial(0, kI * GaussianRational(2));
    LaurentPoly hpart = (m[1][0] - m[0][1]) * monomial(0, -kI * kHalf);
    LaurentPoly ppart = (off + diag) * monomial(0, kHalf);
    LaurentPoly mpart = (off - diag) * monomial(0, kHalf);
    LieElement r;
    auto take = [&](const LaurentPoly& p, Kind kind, bool symmetric) {
        for (const auto& [k, c] : p) {
            if (c.im != 0) return false;
            GaussianRational mirror = p.coefficient(-k);
            if (symmetric ? !(mirror == c) : !(mirror == -c)) return false;
            if (k < 0) continue;
            if (k == 0) {
                if (!symmetric) return false;
                r.add(BasisElement{kind, 0}, c.re / 2);
            } else {
                r.add(BasisElement{kind, k}, c.re);
            }
        }
        return true;
    };
    if (!take(hpart, Kind::H, true) || !take(ppart, Kind::XPlus, false) || !take(mpart, Kind::XMinus, false))
        return std::nullopt;
    return r;
}

std::vector<BasisElement> realization_basis(int max_index) {
    std::vector<BasisElement> out;
    for (int l = 1; l <= max_index; ++l) out.push_back(BasisElement::x_minus(l));
    for (int k = 0; k <= max_index; ++k) out.push_back(BasisElement::h(k));
    for (int j = 1; j <= max_index; ++j) out.push_back(BasisElement::x_plus(j));
    return out;
}

LoopMatrix matrix_bracket(const LoopMatrix& a, const LoopMatrix& b) {
    LoopMatrix r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                r.m[i][j] += a.m[i][k] * b.m[k][j];
                r.m[i][j] -= b.m[i][k] * a.m[k][j];
            }
        }
    }
    return r;
}

LoopMatrix sigma(const LoopMatrix& a) {
    LoopMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = -invert_t(a.m[j][i]);
    return r;
}

LoopMatrix omega(const LoopMatrix& a) {
    LoopMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = invert_t(a.m[1 - i][1 - j]);
    return r;
}

LoopMatrix onsager_A(int m) { return tensor(sl2_xplus(), monomial(m)) + tensor(sl2_xminus(), monomial(-m)); }

LoopMatrix onsager_G(int l) { return tensor(sl2_h(), antisym(l) * monomial(0, kHalf)); }

LoopMatrix uvw(UvwKind kind, int index) {
    switch (kind) {
        case UvwKind::U:
            return tensor(sl2_xplus(), sym(index)) - tensor(sl2_xminus(), sym(index));
        case UvwKind::V:
            return tensor(sl2_xplus(), antisym(index)) + tensor(sl2_xminus(), antisym(index));
        case UvwKind::W:
            return tensor(sl2_h(), antisym(index));
    }
    return {};
}

namespace {

void expect(RealizationReport& rep, bool ok, const std::string& what) {
    ++rep.checked;
    if (!ok) rep.failures.push_back(what);
}

}  // namespace

RealizationReport verify_structure_constants(int max_index) {
    RealizationReport rep;
    auto basis = realization_basis(max_index);
    for (const auto& a : basis) {
        for (const auto& b : basis) {
            bool ok = embed(bracket(a, b)) == matrix_bracket(embed(a), embed(b));
            expect(rep, ok, "[" + to_string(a) + ", " + to_string(b) + "]");
        }
    }
    return rep;
}

RealizationReport verify_onsager_relations(int max_index) {
    RealizationReport rep;
    for (int l = -max_index; l <= max_index; ++l) {
        for (int m = -max_index; m <= max_index; ++m) {
            expect(rep, matrix_bracket(onsager_A(l), onsager_A(m)) == onsager_G(l - m) * GaussianRational(2),
                   fmt::format("[A_{}, A_{}]", l, m));
            expect(rep, matrix_bracket(onsager_G(l), onsager_A(m)) == onsager_A(m + l) - onsager_A(m - l),
                   fmt::format("[G_{}, A_{}]", l, m));
            expect(rep, matrix_bracket(onsager_G(l), onsager_G(m)) == LoopMatrix{}, fmt::format("[G_{}, G_{}]", l, m));
        }
    }
    return rep;
}

RealizationReport verify_sigma_fixed(int max_index) {
    RealizationReport rep;
    for (const auto& b : realization_basis(max_index)) expect(rep, sigma(embed(b)) == embed(b), "sigma " + to_string(b));
    return rep;
}

RealizationReport verify_omega_fixed(int max_index) {
    RealizationReport rep;
    for (int m = -max_index; m <= max_index; ++m) {
        expect(rep, omega(onsager_A(m)) == onsager_A(m), fmt::format("omega A_{}", m));
        expect(rep, omega(onsager_G(m)) == onsager_G(m), fmt::format("omega G_{}", m));
    }
    return rep;
}

}  // namespace onsager
