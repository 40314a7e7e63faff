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

// Acceptance gate: eight release criteria, one pass/fail line each.
// Every criterion carries a pinned wall-clock budget; exceeding the
// budget fails the criterion even when the checks themselves pass.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wb/dade.hpp"
#include "wb/error.hpp"
#include "wb/grouppoly.hpp"
#include "wb/numth.hpp"
#include "wb/pipeline.hpp"
#include "wb/verify.hpp"

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }

    void absorb(const wb::VerifyReport& rep) {
        require(rep.ok(), rep.suite + ": " + std::to_string(rep.violations) +
                              " violations" +
                              (rep.samples.empty()
                                   ? std::string()
                                   : " (" + rep.samples.front() + ")"));
    }
};

// Budgets in seconds, pinned.  Changing a budget is a release decision,
// not a tuning knob.
constexpr double kBudgetWorkedExample = 1.0;
constexpr double kBudgetCrucialOracle = 5.0;
constexpr double kBudgetSplitTriviality = 5.0;
constexpr double kBudgetDefectIdentity = 5.0;
constexpr double kBudgetFloorParity = 10.0;
constexpr double kBudgetPolynomialSuites = 30.0;
constexpr double kBudgetDadeKernel = 10.0;
constexpr double kBudgetClassicalReduction = 10.0;

constexpr std::uint64_t kCrucialOracleMinCases = 500;

int failures = 0;

void criterion(int index, const std::string& title, double budget,
               const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const wb::Error& e) {
        out.require(false, std::string("library error: ") + e.what());
    } catch (const std::exception& e) {
        out.require(false, std::string("unexpected error: ") + e.what());
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double seconds =
        std::chrono::duration_cast<std::chrono::duration<double>>(t1 - t0)
            .count();
    out.require(seconds <= budget,
                "budget exceeded: " + std::to_string(seconds) + "s > " +
                    std::to_string(budget) + "s");

    std::ostringstream line;
    line << "[" << index << "/8] " << title;
    std::string text = line.str();
    if (text.size() < 58) text.append(58 - text.size(), ' ');
    std::cout << text << (out.ok ? "PASS" : "FAIL") << "  ("
              << std::fixed << std::setprecision(2) << seconds
              << "s, budget " << std::setprecision(0) << budget << "s)\n";
    if (!out.ok) {
        std::cout << "      " << out.detail << "\n";
        ++failures;
    }
}

}  // namespace

int main() {
    std::cout << "acceptance gate: 8 criteria\n";

    criterion(1, "worked example (d,p,q) = (3,7,5) reproduced exactly",
              kBudgetWorkedExample, [](Outcome& out) {
        wb::BdrExampleReport rep = wb::reproduce_bdr_example();
        out.require(rep.example.label.indices() == std::vector<unsigned>{1},
                    "label must be the singleton {1}");
        out.require(rep.example.defect_exponent == 2 &&
                        rep.example.scenario.p == 7,
                    "defect group must be cyclic of order 7^2");
        out.require(rep.example.scenario.d == 3, "level must be 3");
        out.require(rep.regular_element_order == 449 &&
                        rep.eigenvalue_field_degree == 7,
                    "regular element of order 449 with degree-7 eigenvalue "
                    "field");
        mpz_class torus = wb::torus_order(-1, 21, 5);
        out.require(mpz_class(torus % 449) == 0, "449 must divide 5^21 + 1");
        out.require(rep.morita_side_trivial,
                    "quotient-side block must be trivial");
        out.require(rep.tree_edges == 3, "Brauer tree must be a 3-edge line");
        out.require(wb::render_label(rep.example.label) == "Ω_{D/D_1}(k)",
                    "rendering must spell the relative syzygy");
    });

    criterion(2, "crucial-case labels vs elementwise sign oracle",
              kBudgetCrucialOracle, [](Outcome& out) {
        wb::VerifyReport rep = wb::verify_crucial_case_oracle(true);
        out.absorb(rep);
        out.require(rep.cases >= kCrucialOracleMinCases,
                    "sweep must cover at least " +
                        std::to_string(kCrucialOracleMinCases) + " cases, got " +
                        std::to_string(rep.cases));
    });

    criterion(3, "split-form blocks are always trivial",
              kBudgetSplitTriviality, [](Outcome& out) {
        out.absorb(wb::verify_linear_triviality(true));
    });

    criterion(4, "defect exponent identity vs big-integer valuation",
              kBudgetDefectIdentity, [](Outcome& out) {
        out.absorb(wb::verify_valuation_identity(true));
        out.absorb(wb::verify_defect_exponents(true));
    });

    criterion(5, "floor parity lemma, exhaustive to m = 10^4",
              kBudgetFloorParity, [](Outcome& out) {
        out.absorb(wb::verify_floor_parity_lemma(true));
    });

    criterion(6, "polynomial family suites over q in {2,...,9}",
              kBudgetPolynomialSuites, [](Outcome& out) {
        out.absorb(wb::verify_degree_families(true));
        out.absorb(wb::verify_degree_families_brute(true));
        out.absorb(wb::verify_unitary_families(true));
        out.absorb(wb::verify_unitary_families_brute(true));
        out.absorb(wb::verify_power_min_polys(true));
    });

    criterion(7, "sign kernel bijection and deflation round trips",
              kBudgetDadeKernel, [](Outcome& out) {
        out.absorb(wb::verify_sign_kernel(true));
        out.absorb(wb::verify_deflation(true));
    });

    criterion(8, "classical reductions match the reduced block",
              kBudgetClassicalReduction, [](Outcome& out) {
        out.absorb(wb::verify_classical_reduction(true));
    });

    if (failures == 0) {
        std::cout << "acceptance gate: all 8 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance gate: " << failures << " criteria FAILED\n";
    return 1;
}
