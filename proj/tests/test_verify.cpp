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

#include <doctest.h>

#include "wb/error.hpp"
#include "wb/verify.hpp"

using namespace wb;

namespace {

// Equality of everything except wall-clock time.
void check_drivers_agree(VerifyReport (*verifier)(bool)) {
    VerifyReport serial = verifier(false);
    VerifyReport openmp = verifier(true);
    CHECK(serial.cases == openmp.cases);
    CHECK(serial.violations == openmp.violations);
    CHECK(serial.samples == openmp.samples);
    CHECK(serial.suite == openmp.suite);
    CHECK(serial.ok());
    CHECK(serial.cases > 0);
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("serial and OpenMP drivers produce identical reports") {
    check_drivers_agree(&verify_deflation);
    check_drivers_agree(&verify_sign_sequences);
    check_drivers_agree(&verify_zsygmondy_search);
}

TEST_CASE("named suites run clean") {
    SuiteResult dade = run_suite("dade", true);
    CHECK(dade.ok);
    CHECK(dade.reports.size() == 2);
    for (const auto& r : dade.reports) {
        CHECK(r.ok());
        CHECK(r.cases > 0);
    }

    SuiteResult signs = run_suite("signs", false);
    CHECK(signs.ok);
    CHECK(signs.reports.size() == 1);
}

TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 6);
    try {
        run_suite("nonsense", true);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OutOfRange);
    }
}

}  // TEST_SUITE
