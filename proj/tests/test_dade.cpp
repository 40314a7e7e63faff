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

#include <vector>

#include "wb/dade.hpp"
#include "wb/error.hpp"

using namespace wb;

namespace {

bool has_kind(const Error& e, ErrorKind k) { return e.kind() == k; }

}  // namespace

TEST_SUITE("dade") {

TEST_CASE("shape and label validation") {
    CHECK_THROWS_AS(CyclicPGroupShape(4, 3), Error);
    CHECK_THROWS_AS(CyclicPGroupShape(2, 3), Error);
    CHECK_THROWS_AS(CyclicPGroupShape(3, 0), Error);
    CHECK_THROWS_AS(CyclicPGroupShape(3, 65), Error);

    CyclicPGroupShape s(3, 2);
    CHECK_THROWS_AS(DadeLabel(s, 0b100), Error);

    DadeLabel x(CyclicPGroupShape(3, 3), 0b101);
    CHECK(x.indices() == std::vector<unsigned>{0, 2});
    CHECK(x.contains(0));
    CHECK_FALSE(x.contains(1));
    CHECK_FALSE(x.empty());
}

TEST_CASE("sign vectors are strict about entries and indexing") {
    SignVector v({1, -1, 1});
    CHECK(v.length() == 3);
    CHECK(v.at(1) == 1);
    CHECK(v.at(2) == -1);
    CHECK_THROWS_AS(v.at(0), Error);
    CHECK_THROWS_AS(v.at(4), Error);
    CHECK_THROWS_AS(SignVector({1, 0, 1}), Error);
    CHECK_THROWS_AS(SignVector({}), Error);
}

TEST_CASE("omega_lambda matches the prefix-parity rule") {
    CyclicPGroupShape s3(3, 3);
    CHECK(omega_lambda(DadeLabel(s3, 0)) == SignVector({1, 1, 1}));
    CHECK(omega_lambda(DadeLabel(s3, 0b001)) == SignVector({-1, -1, -1}));
    CHECK(omega_lambda(DadeLabel(CyclicPGroupShape(3, 2), 0b10)) ==
          SignVector({1, -1}));
}

TEST_CASE("invert_omega inverts omega_lambda") {
    for (unsigned l = 1; l <= 6; ++l) {
        CyclicPGroupShape s(5, l);
        for (std::uint64_t bits = 0; bits < (1ull << l); ++bits) {
            DadeLabel x(s, bits);
            CHECK(invert_omega(omega_lambda(x), 5) == x);
        }
    }
}

TEST_CASE("interval labels agree with the closed-form signs") {
    const unsigned l = 5;
    for (unsigned a = 0; a < l; ++a) {
        for (unsigned b = a; b < l; ++b) {
            DadeLabel x = interval_label(a, b, l);
            SignVector v = omega_lambda(x);
            for (unsigned i = 1; i <= l; ++i)
                CHECK(v.at(i) == omega_of_interval_closed_form(a, b, l, i));
        }
    }
    CHECK(interval_label(2, 1, 5).empty());
    CHECK(interval_label(4, 0, 1).empty());
    CHECK_THROWS_AS(interval_label(0, 5, 5), Error);
    CHECK_THROWS_AS(omega_of_interval_closed_form(2, 1, 5, 1), Error);
}

TEST_CASE("label addition is symmetric difference") {
    CyclicPGroupShape s(3, 2);
    DadeLabel a(s, 0b01);
    DadeLabel b(s, 0b10);
    CHECK(add_labels(a, b).bits() == 0b11);
    CHECK(add_labels(a, a).empty());
    CHECK(add_labels(a, DadeLabel(s, 0)) == a);

    DadeLabel other(CyclicPGroupShape(3, 3), 0);
    try {
        add_labels(a, other);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(has_kind(e, ErrorKind::IncompatibleShapes));
    }
}

TEST_CASE("omega_operator toggles the full syzygy") {
    DadeLabel x(CyclicPGroupShape(3, 2), 0);
    DadeLabel y = omega_operator(x);
    CHECK(y.bits() == 0b01);
    CHECK(omega_operator(y) == x);
}

TEST_CASE("deflation drops the central exponent and shifts") {
    DadeLabel x(CyclicPGroupShape(3, 3), 0b110);
    DadeLabel xbar = deflate_label(x, 1);
    CHECK(xbar.length() == 2);
    CHECK(xbar.bits() == 0b10);
    CHECK(inflate_label(xbar, 1, x.contains(1) ? 1 : 0) == x);

    try {
        deflate_label(DadeLabel(CyclicPGroupShape(3, 3), 0b011), 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(has_kind(e, ErrorKind::InvalidDomination));
    }
    CHECK_THROWS_AS(deflate_label(x, 0), Error);
    CHECK_THROWS_AS(deflate_label(x, 3), Error);
    CHECK_THROWS_AS(inflate_label(xbar, 1, 2), Error);
}

TEST_CASE("rendering spells out the syzygy composition") {
    CHECK(render_label(DadeLabel(CyclicPGroupShape(3, 2), 0)) == "k");
    CHECK(render_label(DadeLabel(CyclicPGroupShape(3, 2), 0b10)) ==
          "Ω_{D/D_1}(k)");
    CHECK(render_label(DadeLabel(CyclicPGroupShape(3, 3), 0b101)) ==
          "Ω_{D/D_0} ∘ Ω_{D/D_2}(k)");
}

TEST_CASE("labels round-trip through JSON") {
    DadeLabel x(CyclicPGroupShape(7, 2), 0b10);
    const std::string text = label_to_json_string(x);
    CHECK(text == "{\"A\":[1],\"l\":2,\"p\":7}");
    CHECK(label_from_json_string(text) == x);

    for (std::uint64_t bits = 0; bits < 16; ++bits) {
        DadeLabel y(CyclicPGroupShape(5, 4), bits);
        CHECK(label_from_json_string(label_to_json_string(y)) == y);
    }

    CHECK_THROWS_AS(label_from_json_string("not json"), Error);
    CHECK_THROWS_AS(label_from_json_string("{\"p\":3,\"l\":2}"), Error);
    CHECK_THROWS_AS(label_from_json_string("{\"A\":[9],\"l\":2,\"p\":3}"),
                    Error);
}

}  // TEST_SUITE
