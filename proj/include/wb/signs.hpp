/*
   Copyright 2026 the wblock authors

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

#pragma once

#include <cstdint>
#include <utility>

#include "wb/dade.hpp"
#include "wb/error.hpp"

namespace wb {

/**
 * @brief A semisimple p-element inside the tower GL^eps_{m p^{a'}}(q),
 * together with the shape of its centralizer.
 *
 * The element u has order p^{a+b} where p^a is the p-part of q - eps;
 * its centralizer is GL^eps_{m p^{a'-b}}(q^{p^b}), which is what the
 * sign invariant sees. The multiplicity m is prime to p and b ranges
 * over 0..a'.
 */
struct GLTowerElement {
    int eps;
    std::uint64_t m;
    unsigned aprime;
    unsigned a;
    std::uint64_t p;
    unsigned b;

    GLTowerElement(int eps_, std::uint64_t m_, unsigned aprime_, unsigned a_,
                   std::uint64_t p_, unsigned b_);
};

/**
 * @brief Relative rank of GL^eps_m: m for the split form, floor(m/2)
 * for the unitary form.
 */
std::uint64_t relative_rank(int eps, std::uint64_t m);

/**
 * @brief The sign invariant of a tower element: the product of the
 * rank-parities of the ambient group and of the centralizer.
 *
 * b = 0 means a central element, where the centralizer is the whole
 * group and the sign is +1. Otherwise the sign is
 * (-1)^{relative_rank(eps, m p^{a'}) + relative_rank(eps, m p^{a'-b})},
 * which is +1 whenever eps = +1, and for eps = -1 equals -1 exactly
 * when m is odd, b is odd and p = 3 (mod 4). b > a' is refused
 * (invalid-exponent).
 */
int omega_g_of_tower_element(const GLTowerElement& x);

/**
 * @brief The sign sequence of a generator t of order p^{a+e} in the
 * tower GL^eps_{m p^{a'}}(q), evaluated down the power sequence.
 *
 * Entry j (1 <= j <= l) is the sign invariant of u = t^{p^{l-j}}, an
 * element of order p^{max(0, a+e-(l-j))}, computed elementwise through
 * omega_g_of_tower_element. Requires e < l (hypothesis-violation,
 * since t^{p^{l-1}} must be central) and e <= a' (invalid-exponent).
 */
SignVector sign_sequence_oracle(int eps, std::uint64_t m, unsigned aprime,
                                unsigned a, unsigned l, unsigned e,
                                std::uint64_t p);

/**
 * @brief Closed-form support interval of the sign sequence.
 *
 * Empty unless eps = -1, m odd and p = 3 (mod 4); in that case the
 * interval is [l - a2, l - 1]. Empty intervals are returned as the
 * canonical pair (l, l-1) with first > second, which interval_label
 * maps to the empty label.
 */
std::pair<unsigned, unsigned> interval_form(int eps, std::uint64_t m,
                                            unsigned a, unsigned a2,
                                            unsigned l, std::uint64_t p);

/**
 * @brief The label determined by a sign sequence: invert_omega(v).
 *
 * A sign sequence determines the endo-permutation source uniquely, so
 * this conversion is the last step of every pipeline computation.
 */
DadeLabel label_from_sign_sequence(const SignVector& v,
                                   std::uint64_t p = 3);

}  // namespace wb
