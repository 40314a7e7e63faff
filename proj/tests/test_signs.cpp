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
#include "wb/signs.hpp"

using namespace wb;

TEST_SUITE("signs") {

TEST_CASE("relative rank splits by form") {
    CHECK(relative_rank(1, 5) == 5);
    CHECK(relative_rank(-1, 5) == 2);
    CHECK(relative_rank(-1, 6) == 3);
    CHECK_THROWS_AS(relative_rank(0, 5), Error);
    CHECK_THROWS_AS(relative_rank(1, 0), Error);
}

TEST_CASE("tower element validation") {
    CHECK_THROWS_AS(GLTowerElement(2, 1, 1, 1, 3, 0), Error);
    CHECK_THROWS_AS(GLTowerElement(-1, 0, 1, 1, 3, 0), Error);
    CHECK_THROWS_AS(GLTowerElement(-1, 3, 1, 1, 3, 0), Error);
    CHECK_THROWS_AS(GLTowerElement(-1, 1, 1, 1, 4, 0), Error);
}

TEST_CASE("sign invariant of a single tower element") {
    // -1 requires the unitary form, odd multiplicity, odd exponent and
    // p = 3 mod 4, all at once
    CHECK(omega_g_of_tower_element(GLTowerElement(-1, 1, 2, 1, 3, 1)) == -1);
    CHECK(omega_g_of_tower_element(GLTowerElement(-1, 1, 2, 1, 3, 2)) == 1);
    CHECK(omega_g_of_tower_element(GLTowerElement(-1, 1, 2, 1, 5, 1)) == 1);
    CHECK(omega_g_of_tower_element(GLTowerElement(1, 1, 2, 1, 3, 1)) == 1);
    CHECK(omega_g_of_tower_element(GLTowerElement(-1, 2, 2, 1, 3, 1)) == 1);
    CHECK(omega_g_of_tower_element(GLTowerElement(-1, 1, 2, 1, 3, 0)) == 1);

    try {
        omega_g_of_tower_element(GLTowerElement(-1, 1, 2, 1, 3, 3));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidExponent);
    }
}

TEST_CASE("sign sequences down the power tower") {
    SignVector v = sign_sequence_oracle(-1, 1, 1, 1, 2, 1, 3);
    CHECK(v == SignVector({1, -1}));
    DadeLabel x = label_from_sign_sequence(v, 3);
    CHECK(x.indices() == std::vector<unsigned>{1});

    // doubling m kills every sign
    SignVector w = sign_sequence_oracle(-1, 2, 1, 1, 2, 1, 3);
    CHECK(w == SignVector({1, 1}));
    CHECK(label_from_sign_sequence(w, 3).empty());

    try {
        sign_sequence_oracle(-1, 1, 1, 2, 3, 2, 3);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidExponent);
    }
    try {
        sign_sequence_oracle(-1, 1, 2, 1, 2, 2, 3);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisViolation);
    }
}

TEST_CASE("closed-form interval matches the non-trivial criterion") {
    // non-trivial: unitary, odd multiplicity, p = 3 mod 4
    auto iv = interval_form(-1, 1, 2, 1, 3, 7);
    CHECK(iv.first == 2);
    CHECK(iv.second == 2);

    auto full = interval_form(-1, 3, 1, 2, 3, 3);
    CHECK(full.first == 1);
    CHECK(full.second == 2);

    // each failing hypothesis forces the canonical empty pair (l, l-1)
    CHECK(interval_form(1, 1, 2, 1, 3, 7).first == 3);
    CHECK(interval_form(-1, 2, 2, 1, 3, 7).first == 3);
    CHECK(interval_form(-1, 1, 2, 1, 3, 5).first == 3);
    CHECK(interval_form(-1, 1, 2, 0, 3, 7) ==
          std::pair<unsigned, unsigned>{3, 2});

    CHECK_THROWS_AS(interval_form(-1, 1, 2, 9, 3, 7), Error);
}

}  // TEST_SUITE
