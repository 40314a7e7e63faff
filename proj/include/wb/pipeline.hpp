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

#include "wb/dade.hpp"
#include "wb/grouppoly.hpp"

namespace wb {

// One reduction scenario: a cyclic block of `group` at the odd prime `p`,
// supported on a subspace of dimension `support_dim`, together with the
// reduced general linear or unitary datum it collapses to.
//
// For GL/GU the support satisfies support_dim = m * d * p^aprime with p not
// dividing m; for Sp/Spin it is support_dim = 2 * (m * p^aprime) * d.  The
// reduced datum is GL^{eps_reduced} of rank n_reduced = m * p^aprime over a
// field of order q_reduced = q^d, and p divides q_reduced - eps_reduced.
struct BlockScenario {
    GroupDescriptor group;
    std::uint64_t p;
    unsigned support_dim;
    unsigned d;
    std::uint64_t m;
    unsigned aprime;
    int eps_reduced;
    std::uint64_t n_reduced;
    mpz_class q_reduced;
};

// Computed invariant of one scenario.  `defect_exponent` is a + aprime at
// the reduced level, so the defect group is cyclic of order p^defect_exponent.
// `label` encodes W as a composition of relative syzygies applied to k;
// `trivial` holds exactly when the label is empty.  `chain` lists the
// reduction steps that were applied, in order; `notes` carries existence
// caveats and degenerate-case explanations.  `special_linear` marks a report
// that has been re-attributed to SL/SU (or a central quotient thereof).
struct WReport {
    BlockScenario scenario;
    unsigned defect_exponent;
    DadeLabel label;
    bool trivial;
    std::vector<std::string> chain;
    std::vector<std::string> notes;
    bool special_linear = false;
};

// Base case of the classification: a cyclic block of GL^eps_n(q) whose
// defect group is the Sylow p-subgroup of the Coxeter torus, for an odd
// prime p dividing q - eps.  With a = v_p(q - eps) and aprime = v_p(n),
// the label is the interval [a, a + aprime - 1] when eps = -1, n is odd
// and p = 3 (mod 4), and empty otherwise (aprime = 0 gives the empty
// interval, hence a trivial invariant).
//
// Throws: hypothesis-violation if p does not divide q - eps or p is not an
// odd prime; out-of-range if n < 2 or eps is not +-1; invalid-descriptor if
// q is not a prime power.
WReport w_base(int eps, unsigned n, std::uint64_t q, std::uint64_t p);

// Full GL/GU pipeline.  n0 is the dimension of the non-fixed support of the
// block's defining semisimple element; d = mult_order(eps * q, p) is the
// level.  For d = 1 full support (n0 = n) is forced and the base case
// applies directly.  For d > 1 the block is first moved to the support
// subgroup (if n0 < n) and then down the level, landing in the base case
// for GL^{eps(d)}_{n0/d}(q^d), where eps(d) = +1 unless eps = -1 and d is
// odd.  A reduced rank of one means the defect group is central and the
// invariant is trivial.
//
// Throws: invalid-support if d does not divide n0; invalid-scenario if
// d = 1 and n0 < n; bad-characteristic if p divides q; out-of-range for
// n0 < 1 or n0 > n.
WReport w_glgu(int eps, unsigned n, std::uint64_t q, std::uint64_t p,
               unsigned n0);

// Classical pipeline for Sp and Spin groups.  `scenario` must be one of the
// values produced by centralizer_scenarios(g, p) and n0 = 2 * m * d its
// support dimension.  The block is reduced to GL^{eps}_{n'}(q') with
// n' = m and q' = q^d.  Ranks n' <= 2 force the defect group into the
// center of the centralizer and give a trivial invariant; the residual
// configuration (q', n') = (2, 3) is the Sp_6(2) case at p = 3, whose
// cyclic blocks have defect at most one, again with trivial invariant.
// Otherwise the base case applies to the reduced datum.
//
// Throws: invalid-descriptor if g is not Sp/Spin; invalid-scenario if the
// scenario does not belong to (g, p) or n0 does not match it.
WReport w_classical(const GroupDescriptor& g, std::uint64_t p,
                    const CentralizerScenario& scenario, unsigned n0);

// Transfers a GL^eps_n(q) report to SL^eps_n(q) and its central quotients.
// Valid only when p does not divide q - eps; the invariant is unchanged.
//
// Throws: out-of-scope if p divides q - eps; invalid-scenario if the report
// was not computed for (eps, n, q, p).
WReport sl_su_transfer(int eps, unsigned n, std::uint64_t q, std::uint64_t p,
                       const WReport& report);

// Enumerates every reduction scenario of (g, p) together with its computed
// report, ordered by (support_dim, m, aprime).  For GL/GU with d = 1 there
// is a single full-support scenario; for d > 1 one scenario per multiple
// n0 = m * d * p^aprime <= n.  For Sp/Spin one scenario per centralizer
// scenario.  Each WReport embeds its BlockScenario.
std::vector<WReport> enumerate_scenarios(const GroupDescriptor& g,
                                         std::uint64_t p);

// Structured reproduction of the worked (d, p, q) = (3, 7, 5) example:
// GU_21(5) at p = 7 with a regular semisimple element of order 449.
// Every numbered fact is re-derived and checked; `checks` lists the
// verified statements in order.  The Brauer tree of the block is a line
// with `tree_edges` = d edges, and the Morita-correspondent block on the
// quotient side has trivial invariant (`morita_side_trivial`), by contrast
// with the non-trivial label of the block itself.
struct BdrExampleReport {
    WReport example;
    WReport reduced_step;
    std::uint64_t regular_element_order;
    unsigned eigenvalue_field_degree;
    unsigned level;
    unsigned tree_edges;
    bool morita_side_trivial;
    std::vector<std::string> checks;
};

// Runs the reproduction.  Throws reproduction-failure with an expected/got
// diff on the first assertion that does not hold.
BdrExampleReport reproduce_bdr_example();

// JSON encodings.  A report serializes to
//   {"family","n","q","p","n0","d","m","aprime","eps_reduced","q_reduced",
//    "defect_exponent","label":{"p","l","A"},"rendered","trivial",
//    "chain":[...],"notes":[...]}
// where q_reduced is a number when it fits in 64 bits and a decimal string
// otherwise, and family reads "SL"/"SU" for transferred reports.
std::string report_to_json_string(const WReport& report);
std::string bdr_report_to_json_string(const BdrExampleReport& report);

// Human-readable one-line summary used by the command line tools.
std::string report_headline(const WReport& report);

}  // namespace wb
