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
#include <vector>

#include "wb/error.hpp"
#include "wb/numth.hpp"

using namespace wb;

TEST_SUITE("numth") {

TEST_CASE("p-adic valuation on machine and big integers") {
    CHECK(padic_val(3, std::int64_t{18}) == 2);
    CHECK(padic_val(5, std::int64_t{7}) == 0);
    CHECK(padic_val(7, std::int64_t{-343}) == 3);
    CHECK(padic_val(7, mpz_class(343) * 5) == 3);
    CHECK(padic_val(3, mpz_pow(3, 40)) == 40);
    CHECK_THROWS_AS(padic_val(3, std::int64_t{0}), Error);
    try {
        padic_val(3, mpz_class(0));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UndefinedValuation);
    }
}

TEST_CASE("multiplicative orders, including negative bases") {
    CHECK(mult_order(2, 7) == 3);
    CHECK(mult_order(-5, 7) == 3);
    CHECK(mult_order(25, 449) == 7);
    CHECK(mult_order(-1, 5) == 2);
    try {
        mult_order(6, 9);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAUnit);
    }
}

TEST_CASE("floor parity agrees with direct evaluation in small range") {
    for (std::uint64_t p : {3, 5, 7}) {
        for (unsigned b = 1; b <= 3; ++b) {
            std::uint64_t pb = checked_pow(p, b);
            for (std::uint64_t m = 1; m <= 100; ++m) {
                int direct = static_cast<int>((m / 2 + (m * pb) / 2) % 2);
                CHECK(floor_parity(m, b, p) == direct);
            }
        }
    }
    CHECK_THROWS_AS(floor_parity(0, 1, 3), Error);
    CHECK_THROWS_AS(floor_parity(1, 0, 3), Error);
    CHECK_THROWS_AS(floor_parity(1, 1, 4), Error);
}

TEST_CASE("primality, factorisation, prime powers") {
    CHECK(is_prime(2));
    CHECK(is_prime(449));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));

    CHECK(factor(78126) == std::vector<std::uint64_t>{2, 3, 29, 449});
    CHECK(factor(360) == std::vector<std::uint64_t>{2, 2, 2, 3, 3, 5});

    std::uint64_t r = 0;
    unsigned k = 0;
    CHECK(is_prime_power(8, &r, &k));
    CHECK(r == 2);
    CHECK(k == 3);
    CHECK(is_prime_power(49));
    CHECK_FALSE(is_prime_power(12));
    CHECK_FALSE(is_prime_power(1));
}

TEST_CASE("checked and modular powers") {
    CHECK(checked_pow(2, 10) == 1024);
    CHECK_THROWS_AS(checked_pow(2, 64), Error);
    CHECK(mpz_pow(10, 20) == mpz_class("100000000000000000000"));
    CHECK(mod_pow(5, 3, 7) == 6);
    CHECK(mod_mul(10, 20, 7) == 4);
}

TEST_CASE("primitive prime divisors") {
    // 2^4 - 1 = 15: the factor 5 first appears at exponent 4.
    CHECK(zsygmondy_prime(2, 4, 1) == 5);
    // 2^6 - 1 = 63 has no primitive factor (the classical exception).
    CHECK_FALSE(zsygmondy_prime(2, 6, 1).has_value());
    // 2^3 + 1 = 9 and 3 already divides 2 + 1.
    CHECK_FALSE(zsygmondy_prime(2, 3, -1).has_value());
    CHECK(zsygmondy_prime(2, 6, -1) == 7);
    // 5^7 + 1 = 2 * 3 * 29 * 449; both 29 and 449 are primitive and the
    // smaller one is returned.
    CHECK(zsygmondy_prime(5, 7, -1) == 29);
    CHECK(zsygmondy_prime(2, 10, 1) == 11);

    CHECK_THROWS_AS(zsygmondy_prime(2, 2, 1), Error);
    CHECK_THROWS_AS(zsygmondy_prime(6, 5, 1), Error);
}

TEST_CASE("the worked example's element order divides the torus order") {
    mpz_class t = mpz_pow(5, 21) + 1;
    CHECK(t % 449 == 0);
    CHECK(mpz_pow(5, 7) + 1 == 449 * 174);
}

}  // TEST_SUITE
