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

#ifndef ONSAGER_ELEMENTS_HPP
#define ONSAGER_ELEMENTS_HPP

#include "onsager/lie.hpp"
#include "onsager/uea.hpp"

namespace onsager {

enum class Sign { Plus, Minus };

inline Kind kind_of(Sign s) { return s == Sign::Plus ? Kind::XPlus : Kind::XMinus; }
inline int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }

// -(h_{a+b} - h_{a-b}) for any integers a, b; Lambda_{0,b,1} = 0.
LieElement lambda1(int a, int b);

// p_k(j,l) = [x+_j, D-_{k-1,1}(j,l)]
LieElement p_def(int k, int j, int l);

// Closed double sum, with the even-u correction term.
LieElement p_closed(int u, int j, int l);

// D+-_{u,1}(j,l) = +-1/2 [D+-_{u-1,1}(j,l), Lambda_{j,l,1}]; D+_{0,1} = x+_j, D-_{0,1} = x-_l.
LieElement d1_rec(Sign sign, int u, int j, int l);
LieElement d1_closed(Sign sign, int u, int j, int l);

// [x+_k, Lambda_{j,l,1}] by the four-term formula
LieElement bracket_x_lambda1(int k, int j, int l);

/*
 * Lambda_{j,l,k}: 0 for k < 0, 1 for k = 0, lambda1(j,l) for k = 1 (any j);
 * k >= 2 requires j, l >= 1. Cached per (j,l,k).
 */
UEAElement lambda_rec(int j, int l, int k);

// Coefficient of u^k in exp(-sum_s p_s u^s / s).
UEAElement lambda_series(int j, int l, int k);

inline UEAElement lambda(int j, int l, int k) { return lambda_rec(j, l, k); }

enum class DuvMethod { Recursion, Multinomial, Series };

// D+-_{u,v}(j,l); zero for v < 0, delta_{u,0} for v = 0.
UEAElement duv(Sign sign, int u, int v, int j, int l, DuvMethod method = DuvMethod::Recursion);

// D+-_u(j,k,m) = sum_{n,v} (-1)^{n+v} C(u,n) C(u,v) x_{j+(u-2n)k+(u-2v)m}
LieElement d_triple(Sign sign, int u, int j, int k, int m);

/*
 * (sum c_a y_a)^{(k)} for pairwise commuting basis vectors y_a, expanded
 * multinomially: sum over n with |n| = k of prod c_a^{n_a} y_a^{(n_a)}.
 */
UEAElement divided_power_multinomial(const LieElement& a, int k);

}  // namespace onsager

#endif
