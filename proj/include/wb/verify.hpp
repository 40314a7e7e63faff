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

#include <string>
#include <vector>

#include "wb/report.hpp"

namespace wb {

// Every verifier sweeps a pinned parameter range and checks an exact claim
// against at least one independently computed route, recording the number
// of checked cases and any violations.  The `parallel` flag selects the
// OpenMP-chunked driver; `false` runs the serial reference driver.  Both
// produce identical reports (deterministic chunk merge order).

// Valuation of q^n - eps^n against the closed form v_p(q - eps) + v_p(n),
// with the left side computed by big-integer division.
VerifyReport verify_valuation_identity(bool parallel);

// floor(m/2) + floor(m p^b / 2) parity: constant-time library route vs a
// big-integer oracle vs the explicit case split (odd parity exactly when
// p = 3 mod 4, b odd, m odd).  Exhaustive m <= 10^4, b <= 8, odd p <= 97.
VerifyReport verify_floor_parity_lemma(bool parallel);

// zsygmondy_prime against complete 64-bit factorisation of q^n - eps^n:
// the returned prime is the smallest primitive prime divisor, and absence
// is confirmed by testing every prime factor.
VerifyReport verify_zsygmondy_search(bool parallel);

// Constructive route for the minimal polynomials of elements of odd prime
// order p over F_q: families generated from root orbits, each member
// checked (degree = ord_p(q), reciprocal-fixed iff even degree, complete
// family counts).
VerifyReport verify_degree_families(bool parallel);

// Exhaustive enumeration route for the same claims: every monic polynomial
// over F_q, q in {2,3,4,5,7,8,9}, degree <= 6, is scanned; irreducibles
// with odd prime root order are checked individually and family counts are
// compared against (p-1)/ord_p(q) for every applicable p.
VerifyReport verify_degree_families_brute(bool parallel);

// Constructive route for odd-degree irreducibles over F_{q^2} with roots
// of p-power order, p | q + 1: degrees 1 and p, all fixed by the twisted
// reciprocal, with complete counts.
VerifyReport verify_unitary_families(bool parallel);

// Exhaustive odd-degree enumeration for the unitary claims, with a staged
// constant-term filter to keep the scan cheap.
VerifyReport verify_unitary_families_brute(bool parallel);

// Powers of a companion matrix: for each irreducible mu of degree <= 4
// the matrix order equals the root order, and the Krylov minimal
// polynomial of C^j matches the Frobenius-orbit minimal polynomial of
// zeta^j, with the degree formula checked for prime-power orders in the
// split case.
VerifyReport verify_power_min_polys(bool parallel);

// Dade-group sign kernel: the label-to-sign map is a bijective
// homomorphism and matches the interval closed form, exhaustively for
// l <= 16.
VerifyReport verify_sign_kernel(bool parallel);

// Deflation and inflation along a central quotient: round trips, index
// bookkeeping and domination errors, exhaustively for l <= 10.
VerifyReport verify_deflation(bool parallel);

// Elementwise sign-sequence oracle vs the closed-form support interval.
VerifyReport verify_sign_sequences(bool parallel);

// Order formulas: Coxeter-torus Lagrange divisibility, the unitary group
// inside GL over the square field, and the odd-spin/symplectic order
// coincidence.
VerifyReport verify_group_orders(bool parallel);

// Defect exponent a + a' against the big-integer valuation of the torus
// order.
VerifyReport verify_defect_exponents(bool parallel);

// Structural constraints on emitted centralizer scenarios: level and sign
// determined by the order of q mod p, divisibility p | q^d - eps, support
// bounds and full-support type filters.
VerifyReport verify_scenario_constraints(bool parallel);

// Closed-form base-case label vs inversion of the elementwise sign
// sequence, for every (eps = -1, prime power q <= 30, odd p <= 31 with
// p | q + 1, 2 <= n <= 50).
VerifyReport verify_crucial_case_oracle(bool parallel);

// The split case p | q - 1 always yields the trivial invariant.
VerifyReport verify_linear_triviality(bool parallel);

// Every enumerated GL/GU report satisfies the label support constraint
// A inside [a, a + a' - 1], trivial iff empty, and deflates to the
// normalized interval starting at index 1.
VerifyReport verify_label_support(bool parallel);

// Sp/Spin sweeps (q <= 9, n <= 48, p <= 31): non-trivial invariants occur
// exactly for eps = -1, m odd, p | m, p = 3 mod 4 (excluding the
// hard-coded Sp_6(2) configuration) and agree with the reduced-group base
// case.
VerifyReport verify_classical_reduction(bool parallel);

// Runs the full worked-example reproduction.
VerifyReport verify_bdr_reproduction(bool parallel);

struct SuiteResult {
    std::string name;
    std::vector<VerifyReport> reports;
    bool ok = true;
    double seconds = 0.0;
};

// Suite names accepted by run_suite: numth, ffpoly, dade, signs,
// grouppoly, pipeline.
const std::vector<std::string>& suite_names();

// Runs one named suite; "all" runs every suite back to back and returns
// one aggregated result.  Unknown names raise out-of-range.
SuiteResult run_suite(const std::string& name, bool parallel);

std::vector<SuiteResult> run_all_suites(bool parallel);

}  // namespace wb
