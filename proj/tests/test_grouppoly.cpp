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

#include <string>

#include "wb/error.hpp"
#include "wb/grouppoly.hpp"

using namespace wb;

TEST_SUITE("grouppoly") {

TEST_CASE("descriptor admission rules") {
    CHECK_NOTHROW(GroupDescriptor(Family::GL, 1, 2));
    CHECK_NOTHROW(GroupDescriptor(Family::GU, 21, 5));
    CHECK_NOTHROW(GroupDescriptor(Family::Sp, 6, 2));
    CHECK_NOTHROW(GroupDescriptor(Family::SpinPlus, 7, 3));
    CHECK_NOTHROW(GroupDescriptor(Family::SpinPlus, 8, 2));
    CHECK_NOTHROW(GroupDescriptor(Family::SpinMinus, 8, 3));

    CHECK_THROWS_AS(GroupDescriptor(Family::GL, 0, 2), Error);
    CHECK_THROWS_AS(GroupDescriptor(Family::GL, 3, 6), Error);
    CHECK_THROWS_AS(GroupDescriptor(Family::Sp, 4, 2), Error);
    CHECK_THROWS_AS(GroupDescriptor(Family::Sp, 5, 3), Error);
    CHECK_THROWS_AS(GroupDescriptor(Family::Sp, 2, 3), Error);
    CHECK_THROWS_AS(GroupDescriptor(Family::SpinPlus, 7, 2), Error);
    CHECK_THROWS_AS(GroupDescriptor(Family::SpinPlus, 6, 3), Error);
    CHECK_THROWS_AS(GroupDescriptor(Family::SpinMinus, 9, 3), Error);
}

TEST_CASE("rendering and form signs") {
    CHECK(GroupDescriptor(Family::Sp, 6, 2).render() == "Sp_6(2)");
    CHECK(GroupDescriptor(Family::SpinPlus, 8, 3).render() == "Spin+_8(3)");
    CHECK(GroupDescriptor(Family::SpinMinus, 10, 2).render() ==
          "Spin-_10(2)");
    CHECK(GroupDescriptor(Family::GU, 21, 5).render() == "GU_21(5)");

    CHECK(GroupDescriptor(Family::GL, 4, 3).eps() == 1);
    CHECK(GroupDescriptor(Family::GU, 4, 3).eps() == -1);
    CHECK_THROWS_AS(GroupDescriptor(Family::Sp, 6, 2).eps(), Error);

    CHECK(std::string(family_name(Family::SpinMinus)) == "Spin-");
}

TEST_CASE("group orders on small groups") {
    CHECK(group_order(GroupDescriptor(Family::GL, 2, 3)) == 48);
    CHECK(group_order(GroupDescriptor(Family::GL, 3, 2)) == 168);
    CHECK(group_order(GroupDescriptor(Family::GU, 2, 2)) == 18);
    CHECK(group_order(GroupDescriptor(Family::GU, 1, 2)) == 3);
    CHECK(group_order(GroupDescriptor(Family::Sp, 4, 3)) == 51840);
}

TEST_CASE("spin orders factor through the covering kernel") {
    auto parts = spin_order_parts(GroupDescriptor(Family::SpinPlus, 8, 3));
    CHECK(parts.kernel_order == 2);
    CHECK(parts.omega_order * parts.kernel_order ==
          group_order(GroupDescriptor(Family::SpinPlus, 8, 3)));

    auto even_q = spin_order_parts(GroupDescriptor(Family::SpinMinus, 8, 2));
    CHECK(even_q.kernel_order == 1);

    CHECK_THROWS_AS(spin_order_parts(GroupDescriptor(Family::Sp, 6, 2)),
                    Error);
}

TEST_CASE("torus orders and defect exponents") {
    CHECK(torus_order(-1, 3, 2) == 9);
    CHECK(torus_order(1, 4, 3) == 80);

    // v_p(q - eps) + v_p(n), cross-checked internally against the torus
    CHECK(defect_exponent(-1, 7, 125, 7) == 2);
    CHECK(defect_exponent(-1, 21, 5, 3) == 2);
    CHECK(defect_exponent(1, 6, 7, 3) == 2);
    CHECK(defect_exponent(1, 5, 4, 3) == 1);

    try {
        defect_exponent(-1, 21, 5, 7);  // 7 does not divide 5 + 1
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisViolation);
    }
}

TEST_CASE("centralizer scenarios for a symplectic group") {
    GroupDescriptor g(Family::Sp, 12, 5);
    auto sc = centralizer_scenarios(g, 7);
    REQUIRE(sc.size() == 2);
    for (const auto& s : sc) {
        CHECK(s.d == 3);
        CHECK(s.eps == -1);
        CHECK(s.q_reduced == 125);
        CHECK_FALSE(s.type_constraint_on_subspace_only);
    }
    CHECK(sc[0].m == 1);
    CHECK(sc[1].m == 2);
}

TEST_CASE("full-support spin scenarios respect the form type") {
    // d = 3, eps = -1: dimension 2*m*3, full support at m = 7 (odd)
    auto minus = centralizer_scenarios(
        GroupDescriptor(Family::SpinMinus, 42, 5), 7);
    REQUIRE(minus.size() == 7);
    for (std::uint64_t m = 1; m <= 7; ++m) {
        CHECK(minus[m - 1].m == m);
        CHECK(minus[m - 1].type_constraint_on_subspace_only == (m < 7));
    }

    // the plus form refuses odd m at full support
    auto plus = centralizer_scenarios(
        GroupDescriptor(Family::SpinPlus, 42, 5), 7);
    REQUIRE(plus.size() == 6);
    CHECK(plus.back().m == 6);

    CHECK_THROWS_AS(
        centralizer_scenarios(GroupDescriptor(Family::GL, 4, 3), 7), Error);
    try {
        centralizer_scenarios(GroupDescriptor(Family::Sp, 6, 3), 3);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadCharacteristic);
    }
}

}  // TEST_SUITE
