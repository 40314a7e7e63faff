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

#include <cstdint>
#include <set>

#include "wb/error.hpp"
#include "wb/ffpoly.hpp"
#include "wb/numth.hpp"

using namespace wb;

TEST_SUITE("ffpoly") {

TEST_CASE("field tables behave like fields") {
    FieldElementTable F(9);
    const std::uint32_t g = F.generator();
    CHECK(F.element_order(g) == 8);
    CHECK(F.mul(g, F.inv(g)) == 1);
    CHECK(F.pow(g, 8) == 1);
    CHECK(F.add(1, F.neg(1)) == 0);
    // characteristic 3: 1 + 1 + 1 = 0
    CHECK(F.add(F.add(1, 1), 1) == 0);
    CHECK_THROWS_AS(FieldElementTable(6), Error);
    CHECK_THROWS_AS(F.inv(0), Error);
}

TEST_CASE("irreducibility and root orders over F_3") {
    FieldElementTable F(3);
    const MonicPoly f(3, {1, 0, 1});  // x^2 + 1
    CHECK(f.degree() == 2);
    CHECK(is_irreducible(F, f));
    CHECK(root_order(F, f) == 4);
    CHECK(star_involution(F, f) == f);

    const MonicPoly square(3, {1, 2, 1});  // (x + 1)^2
    CHECK_FALSE(is_irreducible(F, square));

    CHECK(poly_eval(F, f, 1) == 2);
}

TEST_CASE("index enumeration covers each monic polynomial once") {
    std::set<std::vector<std::uint32_t>> seen;
    for (std::uint64_t idx = 0; idx < 9; ++idx) {
        MonicPoly f = MonicPoly::from_index(3, 2, idx);
        CHECK(f.degree() == 2);
        CHECK(f.coeffs.back() == 1);
        seen.insert(f.coeffs);
    }
    CHECK(seen.size() == 9);
}

TEST_CASE("find_irreducible returns an irreducible of the right degree") {
    FieldElementTable F(5);
    MonicPoly f = find_irreducible(F, 3);
    CHECK(f.degree() == 3);
    CHECK(is_irreducible(F, f));
}

TEST_CASE("polynomial arithmetic modulo an irreducible") {
    FieldElementTable F(3);
    const MonicPoly f(3, {1, 0, 1});  // x^2 + 1, so x^2 = -1
    std::vector<std::uint32_t> x = {0, 1};
    auto x4 = poly_powmod(F, x, 4, f);
    // strip trailing zeros before comparing
    while (!x4.empty() && x4.back() == 0) x4.pop_back();
    CHECK(x4 == std::vector<std::uint32_t>{1});
}

TEST_CASE("quotient fields expose orders and minimal polynomials") {
    FieldElementTable F(2);
    const MonicPoly h(2, {1, 1, 1});  // x^2 + x + 1
    QuotientField R(F, h);
    CHECK(R.order() == 4);
    CHECK(R.extension_degree() == 2);
    const auto zeta = R.gen();
    CHECK(R.element_order(zeta) == 3);
    CHECK(R.min_poly(zeta) == h);
    CHECK(R.element_order(R.element_of_order(3)) == 3);
    CHECK_THROWS_AS(R.element_of_order(5), Error);
}

TEST_CASE("twisted reciprocal fixes unitary-type linear factors") {
    FieldElementTable F(4);
    // the two primitive cube roots of unity give dagger-fixed factors
    unsigned fixed = 0;
    for (std::uint32_t c = 1; c < 4; ++c) {
        MonicPoly f(4, {c, 1});
        if (dagger_involution(F, f, 2) == f) ++fixed;
    }
    // x - 1 and the two x - omega with omega^3 = 1: all of norm 1
    CHECK(fixed == 3);
    CHECK_THROWS_AS(dagger_involution(F, MonicPoly(4, {1, 1}), 3), Error);
}

TEST_CASE("split-case minimal polynomial degrees") {
    CHECK(min_poly_degree(7, 3, 3) == 1);
    CHECK(min_poly_degree(7, 3, 9) == 3);
    CHECK(min_poly_degree(7, 3, 27) == 9);
    CHECK_THROWS_AS(min_poly_degree(7, 5, 25), Error);
}

TEST_CASE("determinant exponents of irreducible semisimple blocks") {
    // norm map to the base field: exponent (Q^d - 1)/(Q - 1) * nprime
    CHECK(det_of_irreducible_semisimple(3, 4, 1, 2) == 2);
    CHECK(det_of_irreducible_semisimple(5, 4, 2, 1) == 0);
    CHECK_THROWS_AS(det_of_irreducible_semisimple(3, 4, 0, 1), Error);
}

TEST_CASE("packaged lemma checkers accept valid parameters") {
    VerifyReport deg = verify_degree_lemma(4, 3, 6);
    CHECK(deg.ok());
    CHECK(deg.cases > 0);

    VerifyReport uni = verify_unitary_lemma(2, 3, 5);
    CHECK(uni.ok());
    CHECK(uni.cases > 0);

    CHECK_THROWS_AS(verify_degree_lemma(5, 5, 6), Error);
    CHECK_THROWS_AS(verify_unitary_lemma(4, 3, 3), Error);
}

}  // TEST_SUITE
