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

#ifndef ONSAGER_LOOP_HPP
#define ONSAGER_LOOP_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "onsager/lie.hpp"

namespace onsager {

// a + b*i over Q
struct GaussianRational {
    Scalar re;
    Scalar im;

    GaussianRational() = default;
    GaussianRational(Scalar r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(int r) : re(r) {}  // NOLINT(google-explicit-constructor)

    static GaussianRational i() { return {Scalar(0), Scalar(1)}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Scalar r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }
};

std::string to_string(const GaussianRational& z);

// Finite sum of c_k t^k, k in Z.
using LaurentPoly = LinearCombination<int, GaussianRational>;

LaurentPoly monomial(int k, GaussianRational c = GaussianRational(1));
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly invert_t(const LaurentPoly& a);  // t -> 1/t

std::string to_string(const LaurentPoly& p);

// Element of sl2 (x) C[t, 1/t], stored as a 2x2 matrix of Laurent polynomials.
struct LoopMatrix {
    std::array<std::array<LaurentPoly, 2>, 2> m{};

    LoopMatrix& operator+=(const LoopMatrix& o);
    LoopMatrix& operator-=(const LoopMatrix& o);
    friend LoopMatrix operator+(LoopMatrix a, const LoopMatrix& b) { return a += b; }
    friend LoopMatrix operator-(LoopMatrix a, const LoopMatrix& b) { return a -= b; }
    friend LoopMatrix operator*(const LoopMatrix& a, const GaussianRational& s);
    friend bool operator==(const LoopMatrix& a, const LoopMatrix& b) { return a.m == b.m; }
};

std::string to_string(const LoopMatrix& a);

// sl2 matrix (constant) tensored with a Laurent polynomial
LoopMatrix tensor(const std::array<std::array<GaussianRational, 2>, 2>& x, const LaurentPoly& p);

// h_k -> hG (x) (t^k + t^-k), x+-_j -> xG+- (x) (t^j - t^-j)
LoopMatrix embed(const BasisElement& b);
LoopMatrix embed(const LieElement& a);

// Inverse of embed on its image; nullopt for matrices outside the fixed-point algebra.
std::optional<LieElement> unembed(const LoopMatrix& a);

// x-_1..x-_N, h_0..h_N, x+_1..x+_N in basis order
std::vector<BasisElement> realization_basis(int max_index);

LoopMatrix matrix_bracket(const LoopMatrix& a, const LoopMatrix& b);

// x+- -> -x-+, h -> -h, t -> 1/t; on matrices M -> -M^T composed with t -> 1/t.
LoopMatrix sigma(const LoopMatrix& a);

// swap conjugation (x+ <-> x-, h -> -h) composed with t -> 1/t
LoopMatrix omega(const LoopMatrix& a);

LoopMatrix onsager_A(int m);  // x+ (x) t^m + x- (x) t^-m
LoopMatrix onsager_G(int l);  // 1/2 h (x) (t^l - t^-l)

enum class UvwKind { U, V, W };
LoopMatrix uvw(UvwKind kind, int index);

struct RealizationReport {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// embed([a,b]) == [embed a, embed b] over all basis pairs with indices <= max_index
RealizationReport verify_structure_constants(int max_index);

// [A_l, A_m] = 2 G_{l-m}, [G_l, A_m] = A_{m+l} - A_{m-l}, [G_l, G_m] = 0
RealizationReport verify_onsager_relations(int max_index);

// sigma fixes embedded generators; omega fixes A_m and G_l
RealizationReport verify_sigma_fixed(int max_index);
RealizationReport verify_omega_fixed(int max_index);

}  // namespace onsager

#endif
