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
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "wb/error.hpp"

namespace wb {

/**
 * @brief Largest e >= 0 with p^e dividing x.
 *
 * @param p an odd prime (checked; hypothesis-violation otherwise)
 * @param x a nonzero integer (undefined-valuation on zero)
 */
unsigned padic_val(std::uint64_t p, const mpz_class& x);
unsigned padic_val(std::uint64_t p, std::int64_t x);

/**
 * @brief Smallest e >= 1 with b^e = 1 (mod m).
 *
 * b may be negative; it is reduced modulo m first, so for example
 * mult_order(-5, 7) = 3. Requires m >= 2 (out-of-range) and
 * gcd(b, m) = 1 (not-a-unit).
 */
std::uint64_t mult_order(std::int64_t b, std::uint64_t m);

/**
 * @brief Parity of floor(m/2) + floor(m p^b / 2), as 0 or 1.
 *
 * For m >= 1, b >= 1 and odd prime p the sum equals m(1+p^b)/2 when m is
 * even and m(1+p^b)/2 - 1 when m is odd, so its parity depends only on
 * m mod 4 and p^b mod 4; the computation is constant time with no big
 * integers involved.
 */
int floor_parity(std::uint64_t m, unsigned b, std::uint64_t p);

/**
 * @brief Smallest prime f dividing q^n - eps^n but no earlier q^j - eps^j.
 *
 * eps is +1 or -1. A prime f qualifies when f | q^n - eps^n and
 * f does not divide q^j - eps^j for any 1 <= j < n. Returns an empty
 * optional when no prime qualifies (under the ambient hypothesis that
 * q - eps has an odd prime divisor this happens only at q = 2, n = 3,
 * eps = -1). Requires n >= 3 (out-of-range) and q a prime power >= 2
 * (hypothesis-violation).
 *
 * Candidates are tested in ascending order: trial-division primes up to
 * 1e6 first, then the prime factors of the remaining cofactor, which is
 * factored deterministically when it fits in 64 bits. A cofactor at or
 * above 2^64 is only an error (out-of-range) if no smaller prime already
 * qualified.
 */
std::optional<std::uint64_t> zsygmondy_prime(std::uint64_t q, unsigned n,
                                             int eps);

/** @brief Deterministic primality test for any 64-bit value. */
bool is_prime(std::uint64_t n);

/**
 * @brief Prime factorisation of n >= 2, ascending, with multiplicity.
 *
 * Deterministic (trial division plus Brent's cycle-finding variant of
 * the rho method with a fixed parameter schedule).
 */
std::vector<std::uint64_t> factor(std::uint64_t n);

/** @brief True when q = r^k for a prime r and k >= 1; outputs r and k. */
bool is_prime_power(std::uint64_t q, std::uint64_t* r = nullptr,
                    unsigned* k = nullptr);

/** @brief b^e over 64 bits, out-of-range on overflow. */
std::uint64_t checked_pow(std::uint64_t b, unsigned e);

/** @brief b^e as an arbitrary-precision integer. */
mpz_class mpz_pow(std::uint64_t b, unsigned e);

/** @brief b^e mod m with 128-bit intermediate products (m >= 1). */
std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m);

/** @brief a*b mod m without overflow. */
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m);

}  // namespace wb
