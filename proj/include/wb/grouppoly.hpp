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
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wb/error.hpp"

namespace wb {

/**
 * @brief The classical families handled by the reduction.
 *
 * SpinPlus doubles as the single odd-dimensional spin family (type B
 * has only one form class), so odd n is admitted for SpinPlus and
 * refused for SpinMinus.
 */
enum class Family { GL, GU, Sp, SpinPlus, SpinMinus };

const char* family_name(Family f) noexcept;

/**
 * @brief A finite classical group G(n, q) from the admitted table.
 *
 * Admission rules: GL/GU need n >= 1; Sp needs n even, n >= 4, and
 * (n, q) = (4, 2) is refused outright since its isometry group is not
 * the abstract group the reduction expects; SpinPlus needs n >= 7 odd
 * with q odd, or n >= 8 even; SpinMinus needs n >= 8 even. q must be
 * a prime power in every family. Violations raise invalid-descriptor.
 */
struct GroupDescriptor {
    Family family;
    unsigned n;
    std::uint64_t q;

    GroupDescriptor(Family family_, unsigned n_, std::uint64_t q_);

    /** @brief +1 for GL, -1 for GU (invalid-descriptor otherwise). */
    int eps() const;

    std::string render() const;

    bool operator==(const GroupDescriptor&) const = default;
};

/**
 * @brief Shape of the centralizer of the order-p part of a semisimple
 * element in a symplectic or spin group: GL^eps_m(q^d) on a support
 * subspace of dimension 2md.
 */
struct CentralizerScenario {
    unsigned d;
    std::uint64_t m;
    int eps;
    std::uint64_t q_reduced;
    /**
     * True when 2md < n: the form-type constraint relating the spin
     * sign to the parity of m is only known on the support subspace,
     * not for the ambient group.
     */
    bool type_constraint_on_subspace_only;
};

/** @brief Exact group order (Spin families use the double-cover size). */
mpz_class group_order(const GroupDescriptor& g);

/**
 * @brief Spin order split into the underlying Omega-group order and
 * the covering kernel order (2 for odd q, 1 for even q).
 *
 * Only spin descriptors are accepted (invalid-descriptor otherwise);
 * group_order equals omega_order * kernel_order.
 */
struct SpinOrderParts {
    mpz_class omega_order;
    unsigned kernel_order;
};
SpinOrderParts spin_order_parts(const GroupDescriptor& g);

/** @brief Order q^n - eps^n of the relevant maximal torus. */
mpz_class torus_order(int eps, unsigned n, std::uint64_t q);

/**
 * @brief Exponent a + a' of the cyclic defect group: the p-valuations
 * of q - eps and of n.
 *
 * Requires p odd prime dividing q - eps (hypothesis-violation). The
 * result is checked internally against the p-valuation of the torus
 * order q^n - eps^n, which it must equal.
 */
unsigned defect_exponent(int eps, unsigned n, std::uint64_t q,
                         std::uint64_t p);

/**
 * @brief All admissible centralizer shapes for order-p elements in a
 * symplectic or spin group.
 *
 * The order e of q modulo p fixes the pair (d, eps): d = e/2 with
 * eps = -1 when e is even, d = e with eps = +1 when e is odd. Every
 * multiplicity m with 2md <= n is emitted, except that full-support
 * scenarios (2md = n) in spin families must match the form type:
 * SpinPlus takes even m and SpinMinus odd m when eps = -1, and only
 * SpinPlus admits eps = +1 at full support. Requires a symplectic or
 * spin descriptor (invalid-descriptor) and p odd prime not dividing q
 * (bad-characteristic when p | q).
 */
std::vector<CentralizerScenario> centralizer_scenarios(
    const GroupDescriptor& g, std::uint64_t p);

}  // namespace wb
