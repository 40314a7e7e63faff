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

#include "wb/numth.hpp"

#include <algorithm>
#include <numeric>

namespace wb {

namespace {

// Primes below 1e6, used for trial division and the zsygmondy search.
const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        const std::uint32_t limit = 1000000;
        std::vector<bool> sieve(limit + 1, true);
        sieve[0] = sieve[1] = false;
        for (std::uint32_t i = 2; static_cast<std::uint64_t>(i) * i <= limit;
             ++i) {
            if (!sieve[i])
                continue;
            for (std::uint32_t j = i * i; j <= limit; j += i)
                sieve[j] = false;
        }
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i)
            if (sieve[i])
                out.push_back(i);
        return out;
    }();
    return primes;
}

std::uint64_t brent_rho(std::uint64_t n) {
    // Brent's cycle variant with a fixed parameter schedule, so the
    // factorisation is deterministic. n must be composite and odd here.
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t power = 1, lam = 1;
        auto step = [&](std::uint64_t v) {
            return (mod_mul(v, v, n) + c) % n;
        };
        y = step(x);
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            // Batch several differences into one gcd to cut gcd calls.
            std::uint64_t prod = 1;
            std::uint64_t ys = y;
            const std::uint64_t batch = std::min<std::uint64_t>(128, power - lam);
            for (std::uint64_t i = 0; i < batch; ++i) {
                y = step(y);
                prod = mod_mul(prod, x > y ? x - y : y - x, n);
            }
            lam += batch;
            d = std::gcd(prod, n);
            if (d == n) {
                // Replay one step at a time to recover the factor.
                d = 1;
                y = ys;
                while (d == 1) {
                    y = step(y);
                    d = std::gcd(x > y ? x - y : y - x, n);
                }
                break;
            }
        }
        if (d != n)
            return d;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1)
        return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = brent_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

void require_odd_prime(std::uint64_t p, const char* who) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw Error(ErrorKind::HypothesisViolation,
                    std::string(who) + " requires an odd prime p, got " +
                        std::to_string(p));
}

}  // namespace

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    if (m == 0)
        throw Error(ErrorKind::OutOfRange, "mod_pow with zero modulus");
    if (m == 1)
        return 0;
    std::uint64_t result = 1;
    b %= m;
    while (e > 0) {
        if (e & 1)
            result = mod_mul(result, b, m);
        b = mod_mul(b, b, m);
        e >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0)
            return n == p;
    }
    // Deterministic Miller-Rabin witness set for all 64-bit inputs.
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull,
                            9780504ull, 1795265022ull}) {
        std::uint64_t x = mod_pow(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mod_mul(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

std::vector<std::uint64_t> factor(std::uint64_t n) {
    if (n < 2)
        throw Error(ErrorKind::OutOfRange,
                    "factor requires n >= 2, got " + std::to_string(n));
    std::vector<std::uint64_t> out;
    while (n % 2 == 0) {
        out.push_back(2);
        n /= 2;
    }
    for (std::uint32_t p : small_primes()) {
        if (p == 2)
            continue;
        if (static_cast<std::uint64_t>(p) * p > n)
            break;
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    if (n > 1)
        factor_into(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime_power(std::uint64_t q, std::uint64_t* r, unsigned* k) {
    if (q < 2)
        return false;
    auto fs = factor(q);
    for (std::uint64_t f : fs)
        if (f != fs[0])
            return false;
    if (r)
        *r = fs[0];
    if (k)
        *k = static_cast<unsigned>(fs.size());
    return true;
}

unsigned padic_val(std::uint64_t p, const mpz_class& x) {
    require_odd_prime(p, "padic_val");
    if (x == 0)
        throw Error(ErrorKind::UndefinedValuation,
                    "p-adic valuation of zero is undefined");
    mpz_class reduced;
    mpz_class pz = mpz_class(static_cast<unsigned long>(p));
    return static_cast<unsigned>(
        mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

unsigned padic_val(std::uint64_t p, std::int64_t x) {
    require_odd_prime(p, "padic_val");
    if (x == 0)
        throw Error(ErrorKind::UndefinedValuation,
                    "p-adic valuation of zero is undefined");
    std::uint64_t v = x < 0 ? static_cast<std::uint64_t>(-(x + 1)) + 1
                            : static_cast<std::uint64_t>(x);
    unsigned e = 0;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    return e;
}

std::uint64_t mult_order(std::int64_t b, std::uint64_t m) {
    if (m < 2)
        throw Error(ErrorKind::OutOfRange,
                    "mult_order requires modulus >= 2, got " +
                        std::to_string(m));
    std::int64_t rm = b % static_cast<std::int64_t>(m);
    std::uint64_t r =
        static_cast<std::uint64_t>(rm < 0 ? rm + static_cast<std::int64_t>(m)
                                          : rm);
    if (std::gcd(r, m) != 1)
        throw Error(ErrorKind::NotAUnit,
                    std::to_string(b) + " is not a unit modulo " +
                        std::to_string(m));
    // The order divides the Carmichael exponent lambda(m); compute lambda
    // from the factorisation of m, then strip superfluous prime factors.
    auto fs = factor(m);
    std::uint64_t lambda = 1;
    for (std::size_t i = 0; i < fs.size();) {
        std::uint64_t p = fs[i];
        unsigned e = 0;
        while (i < fs.size() && fs[i] == p) {
            ++e;
            ++i;
        }
        std::uint64_t comp;
        if (p == 2)
            comp = e == 1 ? 1 : (e == 2 ? 2 : 1ull << (e - 2));
        else {
            comp = p - 1;
            for (unsigned j = 1; j < e; ++j)
                comp *= p;
        }
        lambda = std::lcm(lambda, comp);
    }
    std::uint64_t order = lambda;
    if (lambda > 1) {
        auto ofs = factor(lambda);
        ofs.erase(std::unique(ofs.begin(), ofs.end()), ofs.end());
        for (std::uint64_t w : ofs) {
            while (order % w == 0 && mod_pow(r, order / w, m) == 1)
                order /= w;
        }
    }
    return order;
}

int floor_parity(std::uint64_t m, unsigned b, std::uint64_t p) {
    if (m < 1)
        throw Error(ErrorKind::OutOfRange, "floor_parity requires m >= 1");
    if (b < 1)
        throw Error(ErrorKind::OutOfRange, "floor_parity requires b >= 1");
    require_odd_prime(p, "floor_parity");
    // floor(x/2) mod 2 depends only on x mod 4, and m p^b mod 4 follows
    // from m mod 4 and p^b mod 4 (p odd, so p^b mod 4 is 1 or 3).
    std::uint64_t pb_mod4 = (p % 4 == 1 || b % 2 == 0) ? 1 : 3;
    std::uint64_t m_mod4 = m % 4;
    int par_m = static_cast<int>(m_mod4 >> 1);
    int par_mpb = static_cast<int>(((m_mod4 * pb_mod4) % 4) >> 1);
    return par_m ^ par_mpb;
}

std::uint64_t checked_pow(std::uint64_t b, unsigned e) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (b != 0 && result > UINT64_MAX / b)
            throw Error(ErrorKind::OutOfRange,
                        std::to_string(b) + "^" + std::to_string(e) +
                            " exceeds 64 bits");
        result *= b;
    }
    return result;
}

mpz_class mpz_pow(std::uint64_t b, unsigned e) {
    mpz_class base(static_cast<unsigned long>(b));
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

std::optional<std::uint64_t> zsygmondy_prime(std::uint64_t q, unsigned n,
                                             int eps) {
    if (eps != 1 && eps != -1)
        throw Error(ErrorKind::OutOfRange, "eps must be +1 or -1");
    if (n < 3)
        throw Error(ErrorKind::OutOfRange,
                    "zsygmondy_prime requires n >= 3, got " +
                        std::to_string(n));
    if (!is_prime_power(q))
        throw Error(ErrorKind::HypothesisViolation,
                    "q must be a prime power >= 2, got " + std::to_string(q));

    const int eps_n = (eps == -1 && n % 2 == 1) ? -1 : 1;
    mpz_class target = mpz_pow(q, n) - eps_n;

    // True when f divides q^n - eps^n but no earlier q^j - eps^j.
    auto qualifies = [&](std::uint64_t f) {
        if (mpz_fdiv_ui(target.get_mpz_t(), f) != 0)
            return false;
        std::uint64_t r = q % f;
        std::uint64_t cur = 1;
        for (unsigned j = 1; j < n; ++j) {
            cur = mod_mul(cur, r, f);
            std::uint64_t ej = (eps == -1 && j % 2 == 1) ? (f - 1) % f : 1;
            if (cur == ej)
                return false;
        }
        return true;
    };

    mpz_class cofactor = target;
    for (std::uint32_t f : small_primes()) {
        if (mpz_divisible_ui_p(cofactor.get_mpz_t(), f)) {
            if (qualifies(f))
                return f;
            mpz_class fz(static_cast<unsigned long>(f));
            mpz_remove(cofactor.get_mpz_t(), cofactor.get_mpz_t(),
                       fz.get_mpz_t());
        }
    }
    if (cofactor == 1)
        return std::nullopt;
    if (mpz_sizeinbase(cofactor.get_mpz_t(), 2) > 64)
        throw Error(ErrorKind::OutOfRange,
                    "remaining cofactor exceeds 64 bits and no smaller prime "
                    "qualified");
    std::uint64_t rem = 0;
    mpz_export(&rem, nullptr, -1, sizeof(rem), 0, 0, cofactor.get_mpz_t());
    auto fs = factor(rem);
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    for (std::uint64_t f : fs)
        if (qualifies(f))
            return f;
    return std::nullopt;
}

}  // namespace wb
