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

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "verify_util.hpp"
#include "wb/error.hpp"
#include "wb/ffpoly.hpp"
#include "wb/numth.hpp"
#include "wb/verify.hpp"

namespace wb {

namespace {

using detail::chunked_sweep;
using detail::odd_primes_upto;

constexpr std::uint32_t kSmallFields[] = {2, 3, 4, 5, 7, 8, 9};

std::uint64_t field_characteristic(std::uint64_t q) {
    std::uint64_t r = 0;
    is_prime_power(q, &r);
    return r;
}

bool is_one_vector(const std::vector<std::uint32_t>& v) {
    if (v.empty() || v[0] != 1) return false;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] != 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    if (n == 1) return {1};
    std::vector<std::uint64_t> fs = factor(n);
    std::vector<std::uint64_t> divs{1};
    std::size_t i = 0;
    while (i < fs.size()) {
        std::size_t j = i;
        while (j < fs.size() && fs[j] == fs[i]) ++j;
        std::size_t base = divs.size();
        std::uint64_t pe = 1;
        for (std::size_t t = i; t < j; ++t) {
            pe *= fs[i];
            for (std::size_t s = 0; s < base; ++s) divs.push_back(divs[s] * pe);
        }
        i = j;
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

VerifyReport verify_valuation_identity(bool parallel) {
    // Chunk per (eps, q); inner loops over the primes dividing q - eps and
    // the exponent n.
    struct Tuple {
        int eps;
        std::uint64_t q;
    };
    std::vector<Tuple> tuples;
    for (int eps : {1, -1}) {
        for (std::uint64_t q = 2; q <= 50; ++q) tuples.push_back({eps, q});
    }
    const std::vector<std::uint64_t> primes = odd_primes_upto(47);

    return chunked_sweep(
        "numth/valuation-identity", tuples.size(), parallel,
        [&](std::size_t i, VerifyReport& local) {
            const auto [eps, q] = tuples[i];
            for (std::uint64_t p : primes) {
                std::uint64_t shifted = eps == 1 ? q - 1 : q + 1;
                if (shifted % p != 0) continue;
                unsigned a = padic_val(p, static_cast<std::int64_t>(shifted));
                for (unsigned n = 1; n <= 60; ++n) {
                    mpz_class v = mpz_pow(q, n);
                    v -= (eps == -1 && n % 2 == 1) ? -1 : 1;
                    unsigned lhs = padic_val(p, v);
                    unsigned rhs =
                        a + padic_val(p, static_cast<std::int64_t>(n));
                    ++local.cases;
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "v_" << p << "(" << q << "^" << n << " - ("
                           << eps << ")^" << n << ") = " << lhs
                           << ", closed form " << rhs;
                        local.record_violation(os.str());
                    }
                }
            }
        });
}

VerifyReport verify_floor_parity_lemma(bool parallel) {
    struct Tuple {
        std::uint64_t p;
        unsigned b;
    };
    std::vector<Tuple> tuples;
    for (std::uint64_t p : odd_primes_upto(97)) {
        for (unsigned b = 1; b <= 8; ++b) tuples.push_back({p, b});
    }

    return chunked_sweep(
        "numth/floor-parity", tuples.size(), parallel,
        [&](std::size_t i, VerifyReport& local) {
            const auto [p, b] = tuples[i];
            const mpz_class P = mpz_pow(p, b);
            const int split_active = (p % 4 == 3 && b % 2 == 1) ? 1 : 0;
            if (b == 1) {
                ++local.cases;
                if (!detail::raises([&, pp = p] { floor_parity(1, 0, pp); },
                                    ErrorKind::OutOfRange) ||
                    !detail::raises([&, pp = p] { floor_parity(0, 1, pp); },
                                    ErrorKind::OutOfRange)) {
                    local.record_violation(
                        "degenerate floor-parity arguments not refused at p=" +
                        std::to_string(p));
                }
            }
            for (std::uint64_t m = 1; m <= 10000; ++m) {
                int lib = floor_parity(m, b, p);
                mpz_class half = P * static_cast<unsigned long>(m);
                half >>= 1;
                half += static_cast<unsigned long>(m / 2);
                int oracle = mpz_odd_p(half.get_mpz_t()) ? 1 : 0;
                int split = (split_active != 0 && m % 2 == 1) ? 1 : 0;
                ++local.cases;
                if (lib != oracle || lib != split) {
                    std::ostringstream os;
                    os << "floor parity at m=" << m << " b=" << b << " p=" << p
                       << ": library " << lib << ", oracle " << oracle
                       << ", case split " << split;
                    local.record_violation(os.str());
                }
            }
        });
}

VerifyReport verify_zsygmondy_search(bool parallel) {
    struct Tuple {
        std::uint64_t q;
        int eps;
    };
    std::vector<Tuple> tuples;
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        for (int eps : {1, -1}) tuples.push_back({q, eps});
    }

    return chunked_sweep(
        "numth/zsygmondy", tuples.size(), parallel,
        [&](std::size_t i, VerifyReport& local) {
            const auto [q, eps] = tuples[i];
            const unsigned n_max = q <= 3 ? 30 : 18;
            for (unsigned n = 3; n <= n_max; ++n) {
                mpz_class v = mpz_pow(q, n);
                v -= (eps == -1 && n % 2 == 1) ? -1 : 1;
                std::uint64_t value = v.get_ui();

                // Complete factorisation route: test every prime factor
                // for primitivity, smallest first.
                std::uint64_t smallest = 0;
                std::uint64_t last = 0;
                for (std::uint64_t f : factor(value)) {
                    if (f == last) continue;
                    last = f;
                    bool primitive = true;
                    for (unsigned j = 1; j < n; ++j) {
                        std::uint64_t rj = mod_pow(q, j, f);
                        std::uint64_t ej =
                            (eps == -1 && j % 2 == 1) ? (f - 1) % f : 1 % f;
                        if (rj == ej) {
                            primitive = false;
                            break;
                        }
                    }
                    if (primitive) {
                        smallest = f;
                        break;
                    }
                }

                std::optional<std::uint64_t> got = zsygmondy_prime(q, n, eps);
                ++local.cases;
                bool match = smallest == 0 ? !got.has_value()
                                           : (got.has_value() && *got == smallest);
                if (!match) {
                    std::ostringstream os;
                    os << "zsygmondy(" << q << ", " << n << ", " << eps
                       << "): library "
                       << (got ? std::to_string(*got) : std::string("none"))
                       << ", factorisation route "
                       << (smallest ? std::to_string(smallest)
                                    : std::string("none"));
                    local.record_violation(os.str());
                }
            }
        });
}

VerifyReport verify_degree_families(bool parallel) {
    struct Pair {
        std::uint32_t q;
        std::uint64_t p;
    };
    std::vector<Pair> pairs;
    for (std::uint32_t q : kSmallFields) {
        for (std::uint64_t p : odd_primes_upto(31)) {
            if (p == field_characteristic(q)) continue;
            pairs.push_back({q, p});
        }
    }

    return chunked_sweep("ffpoly/degree-families", pairs.size(), parallel,
                         [&](std::size_t i, VerifyReport& local) {
                             const auto [q, p] = pairs[i];
                             VerifyReport sub = verify_degree_lemma(q, p, 6);
                             ++local.cases;
                             local.cases += sub.cases;
                             local.violations += sub.violations;
                             for (const std::string& s : sub.samples) {
                                 if (local.samples.size() <
                                     VerifyReport::kMaxSamples) {
                                     local.samples.push_back(s);
                                 }
                             }
                         });
}

VerifyReport verify_degree_families_brute(bool parallel) {
    struct Chunk {
        std::uint32_t q;
        unsigned k;
    };
    std::vector<Chunk> chunks;
    for (std::uint32_t q : kSmallFields) {
        for (unsigned k = 1; k <= 6; ++k) chunks.push_back({q, k});
    }

    // Observed family sizes per (q, p), merged across chunks afterwards.
    std::vector<std::map<std::uint64_t, std::uint64_t>> counts(chunks.size());

    detail::Stopwatch sw;
    std::vector<VerifyReport> parts(chunks.size());
    detail::run_chunks(chunks.size(), parallel, [&](std::size_t ci) {
        const auto [q, k] = chunks[ci];
        VerifyReport& local = parts[ci];
        FieldElementTable F(q);
        const std::uint64_t total = checked_pow(q, k);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            MonicPoly f = MonicPoly::from_index(q, k, idx);
            if (f.coeffs[0] == 0) continue;
            if (!is_irreducible(F, f)) continue;
            std::uint64_t r = root_order(F, f);
            if (r < 3 || r % 2 == 0 || !is_prime(r)) continue;

            // f is the minimal polynomial of an element of odd prime
            // order r in a multiplicative group of characteristic not r.
            std::uint64_t e = mult_order(static_cast<std::int64_t>(q), r);
            ++local.cases;
            if (k != e) {
                std::ostringstream os;
                os << f.render() << " over F_" << q << ": degree " << k
                   << ", but ord_" << r << "(" << q << ") = " << e;
                local.record_violation(os.str());
            }
            bool fixed = star_involution(F, f) == f;
            ++local.cases;
            if (fixed != (k % 2 == 0)) {
                std::ostringstream os;
                os << f.render() << " over F_" << q
                   << ": reciprocal-fixed=" << fixed << " at degree " << k;
                local.record_violation(os.str());
            }
            if (k % 2 == 0) {
                ++local.cases;
                if (mod_pow(q, k / 2, r) != r - 1) {
                    std::ostringstream os;
                    os << f.render() << " over F_" << q << ": " << q << "^"
                       << k / 2 << " != -1 mod " << r;
                    local.record_violation(os.str());
                }
            }
            ++counts[ci][r];
        }
    });

    VerifyReport total;
    total.suite = "ffpoly/degree-families-brute";
    detail::merge_parts(total, parts);

    // Family completeness: the observed number of irreducibles with root
    // order p must be (p-1)/e for every odd prime p with e = ord_p(q) <= 6,
    // and nothing else may appear.
    std::map<std::pair<std::uint32_t, std::uint64_t>, std::uint64_t> observed;
    for (std::size_t ci = 0; ci < chunks.size(); ++ci) {
        for (const auto& [p, c] : counts[ci]) {
            observed[{chunks[ci].q, p}] += c;
        }
    }
    std::map<std::pair<std::uint32_t, std::uint64_t>, std::uint64_t> expected;
    for (std::uint32_t q : kSmallFields) {
        for (unsigned e = 1; e <= 6; ++e) {
            const std::uint64_t unit_count = checked_pow(q, e) - 1;
            if (unit_count < 2) continue;
            std::uint64_t last = 0;
            for (std::uint64_t p : factor(unit_count)) {
                if (p == last) continue;
                last = p;
                if (p < 3 || p % 2 == 0) continue;
                if (mult_order(static_cast<std::int64_t>(q), p) != e) continue;
                expected[{q, p}] = (p - 1) / e;
            }
        }
    }
    for (const auto& [key, want] : expected) {
        ++total.cases;
        auto it = observed.find(key);
        std::uint64_t got = it == observed.end() ? 0 : it->second;
        if (got != want) {
            std::ostringstream os;
            os << "family count over F_" << key.first << " for p=" << key.second
               << ": found " << got << ", expected " << want;
            total.record_violation(os.str());
        }
    }
    for (const auto& [key, got] : observed) {
        if (expected.find(key) == expected.end()) {
            std::ostringstream os;
            os << "unexpected family over F_" << key.first
               << " with root order " << key.second << " (" << got
               << " members)";
            total.record_violation(os.str());
        }
    }

    total.seconds = sw.seconds();
    return total;
}

VerifyReport verify_unitary_families(bool parallel) {
    struct Pair {
        std::uint32_t q;
        std::uint64_t p;
    };
    const std::vector<Pair> pairs = {{2, 3}, {4, 5}, {5, 3}, {8, 3}, {9, 5}};

    return chunked_sweep(
        "ffpoly/unitary-families", pairs.size(), parallel,
        [&](std::size_t i, VerifyReport& local) {
            const auto [q, p] = pairs[i];
            VerifyReport sub =
                verify_unitary_lemma(q, p, static_cast<unsigned>(p));
            ++local.cases;
            local.cases += sub.cases;
            local.violations += sub.violations;
            for (const std::string& s : sub.samples) {
                if (local.samples.size() < VerifyReport::kMaxSamples) {
                    local.samples.push_back(s);
                }
            }
        });
}

VerifyReport verify_unitary_families_brute(bool parallel) {
    struct Chunk {
        std::uint32_t q;
        std::uint64_t p;
        unsigned k;
    };
    // Odd degrees up to 5 over F_4 and up to 3 over the larger squares;
    // the skipped degrees cannot carry qualifying polynomials (the next
    // possible degree after p is p^2 > 5).
    std::vector<Chunk> chunks;
    const std::vector<std::pair<std::uint32_t, std::uint64_t>> pairs = {
        {2, 3}, {4, 5}, {5, 3}, {8, 3}, {9, 5}};
    for (const auto& [q, p] : pairs) {
        unsigned bound = q == 2 ? 5 : 3;
        for (unsigned k = 1; k <= bound; k += 2) chunks.push_back({q, p, k});
    }

    return chunked_sweep(
        "ffpoly/unitary-families-brute", chunks.size(), parallel,
        [&](std::size_t ci, VerifyReport& local) {
            const auto [q, p, k] = chunks[ci];
            const std::uint32_t Q = q * q;
            FieldElementTable F(Q);
            const unsigned ahat =
                padic_val(p, static_cast<std::int64_t>(q) + 1);
            const std::uint64_t p_ahat = checked_pow(p, ahat);
            const std::uint64_t p_next = p_ahat * p;
            const std::uint32_t minus_one = F.neg(1);

            std::uint64_t found = 0;
            const std::uint64_t total = checked_pow(Q, k);
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                MonicPoly f = MonicPoly::from_index(Q, k, idx);
                const std::uint32_t c0 = f.coeffs[0];
                if (c0 == 0) continue;
                // Constant-term filter: for odd degree and a root of
                // p-power order the norm relation forces
                // f(0)^{p^ahat} = -1.
                if (F.pow(c0, p_ahat) != minus_one) continue;
                std::vector<std::uint32_t> x =
                    k == 1 ? std::vector<std::uint32_t>{F.neg(c0)}
                           : std::vector<std::uint32_t>{0, 1};
                if (!is_one_vector(poly_powmod(F, x, p_next, f))) continue;
                if (!is_irreducible(F, f)) continue;

                std::uint64_t r = root_order(F, f);
                ++found;
                ++local.cases;
                if (dagger_involution(F, f, q) != f) {
                    std::ostringstream os;
                    os << f.render() << " over F_" << Q
                       << ": not fixed by the twisted reciprocal";
                    local.record_violation(os.str());
                }
                unsigned want_deg = r <= p_ahat ? 1 : static_cast<unsigned>(p);
                ++local.cases;
                if (k != want_deg) {
                    std::ostringstream os;
                    os << f.render() << " over F_" << Q << ": root order " << r
                       << " at degree " << k << ", expected degree "
                       << want_deg;
                    local.record_violation(os.str());
                }
            }

            std::uint64_t want_count = 0;
            if (k == 1) {
                want_count = p_ahat;
            } else if (k == p) {
                want_count = (p_ahat / p) * (p - 1);
            }
            ++local.cases;
            if (found != want_count) {
                std::ostringstream os;
                os << "degree-" << k << " family over F_" << Q << " at p=" << p
                   << ": found " << found << ", expected " << want_count;
                local.record_violation(os.str());
            }
        });
}

namespace {

std::vector<std::uint32_t> companion_matrix(const FieldElementTable& F,
                                            const MonicPoly& mu) {
    const unsigned k = mu.degree();
    std::vector<std::uint32_t> C(static_cast<std::size_t>(k) * k, 0);
    for (unsigned c = 0; c + 1 < k; ++c) C[(c + 1) * k + c] = 1;
    for (unsigned s = 0; s < k; ++s) C[s * k + (k - 1)] = F.neg(mu.coeffs[s]);
    return C;
}

// M <- M * C for the companion matrix C of mu: columns shift left, the
// last column is M applied to the negated coefficient vector.
void companion_step(const FieldElementTable& F, std::vector<std::uint32_t>& M,
                    const std::vector<std::uint32_t>& negc, unsigned k) {
    for (unsigned r = 0; r < k; ++r) {
        std::uint32_t acc = 0;
        for (unsigned s = 0; s < k; ++s) {
            acc = F.add(acc, F.mul(M[r * k + s], negc[s]));
        }
        for (unsigned c = 0; c + 1 < k; ++c) M[r * k + c] = M[r * k + c + 1];
        M[r * k + (k - 1)] = acc;
    }
}

bool is_identity(const std::vector<std::uint32_t>& M, unsigned k) {
    for (unsigned r = 0; r < k; ++r) {
        for (unsigned c = 0; c < k; ++c) {
            if (M[r * k + c] != (r == c ? 1u : 0u)) return false;
        }
    }
    return true;
}

// Minimal polynomial of M from the Krylov space of the first basis
// vector.  The module over F[M] is isotypic here (F[C] is a field), so
// any nonzero cyclic vector yields the full minimal polynomial.
MonicPoly krylov_min_poly(const FieldElementTable& F,
                          const std::vector<std::uint32_t>& M, unsigned k) {
    struct Row {
        std::vector<std::uint32_t> vec;
        std::vector<std::uint32_t> combo;
        unsigned pivot;
    };
    std::vector<Row> rows;
    std::vector<std::uint32_t> v(k, 0);
    v[0] = 1;
    std::vector<std::uint32_t> combo(k + 1, 0);
    combo[0] = 1;
    for (unsigned t = 0;; ++t) {
        std::vector<std::uint32_t> rv = v;
        std::vector<std::uint32_t> rc = combo;
        for (const Row& row : rows) {
            const std::uint32_t c = rv[row.pivot];
            if (c == 0) continue;
            const std::uint32_t scale = F.div(c, row.vec[row.pivot]);
            for (unsigned i = 0; i < k; ++i) {
                rv[i] = F.sub(rv[i], F.mul(scale, row.vec[i]));
            }
            for (unsigned i = 0; i <= k; ++i) {
                rc[i] = F.sub(rc[i], F.mul(scale, row.combo[i]));
            }
        }
        unsigned pivot = k;
        for (unsigned i = 0; i < k; ++i) {
            if (rv[i] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == k) {
            std::vector<std::uint32_t> cs(rc.begin(), rc.begin() + t + 1);
            return MonicPoly(F.order(), std::move(cs));
        }
        rows.push_back(Row{std::move(rv), std::move(rc), pivot});

        std::vector<std::uint32_t> nv(k, 0);
        for (unsigned r = 0; r < k; ++r) {
            std::uint32_t acc = 0;
            for (unsigned c = 0; c < k; ++c) {
                acc = F.add(acc, F.mul(M[r * k + c], v[c]));
            }
            nv[r] = acc;
        }
        v = std::move(nv);
        for (unsigned i = k; i >= 1; --i) combo[i] = combo[i - 1];
        combo[0] = 0;
    }
}

}  // namespace

VerifyReport verify_power_min_polys(bool parallel) {
    struct Chunk {
        std::uint32_t q;
        unsigned k;
    };
    std::vector<Chunk> chunks;
    for (std::uint32_t q : kSmallFields) {
        for (unsigned k = 1; k <= 4; ++k) chunks.push_back({q, k});
    }

    return chunked_sweep(
        "ffpoly/power-min-polys", chunks.size(), parallel,
        [&](std::size_t ci, VerifyReport& local) {
            const auto [q, k] = chunks[ci];
            FieldElementTable F(q);
            const std::uint64_t total = checked_pow(q, k);
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                MonicPoly mu = MonicPoly::from_index(q, k, idx);
                if (mu.coeffs[0] == 0) continue;
                if (!is_irreducible(F, mu)) continue;

                const std::uint64_t N = root_order(F, mu);
                QuotientField R(F, mu);
                const QuotientField::Elem zeta = R.gen();

                // Deep-check set: every divisor of N plus a dense prefix.
                std::vector<char> deep(N + 1, 0);
                for (std::uint64_t d : divisors_of(N)) deep[d] = 1;
                for (std::uint64_t j = 1; j <= std::min<std::uint64_t>(N, 64);
                     ++j) {
                    deep[j] = 1;
                }

                std::vector<std::uint32_t> negc(k);
                for (unsigned s = 0; s < k; ++s) negc[s] = F.neg(mu.coeffs[s]);
                std::vector<std::uint32_t> M = companion_matrix(F, mu);

                for (std::uint64_t j = 1; j <= N; ++j) {
                    const bool ident = is_identity(M, k);
                    ++local.cases;
                    if (ident != (j == N)) {
                        std::ostringstream os;
                        os << mu.render() << " over F_" << q
                           << ": companion power " << j
                           << (ident ? " is identity before the root order "
                                     : " is not identity at the root order ")
                           << N;
                        local.record_violation(os.str());
                    }
                    if (deep[j] != 0) {
                        MonicPoly g = krylov_min_poly(F, M, k);
                        MonicPoly expect = R.min_poly(R.pow(zeta, j));
                        ++local.cases;
                        if (!(g == expect)) {
                            std::ostringstream os;
                            os << mu.render() << " over F_" << q << ", power "
                               << j << ": Krylov " << g.render()
                               << " vs orbit " << expect.render();
                            local.record_violation(os.str());
                        }
                        const std::uint64_t ordj = N / std::gcd(N, j);
                        ++local.cases;
                        if (ordj == 1) {
                            if (!(g == MonicPoly(q, {F.neg(1), 1}))) {
                                local.record_violation(
                                    mu.render() + ": trivial power has "
                                                  "nontrivial minimal "
                                                  "polynomial");
                            }
                        } else if (g.degree() !=
                                   mult_order(static_cast<std::int64_t>(q),
                                              ordj)) {
                            std::ostringstream os;
                            os << mu.render() << " power " << j << ": degree "
                               << g.degree() << " != ord_" << ordj << "(" << q
                               << ")";
                            local.record_violation(os.str());
                        }
                        if (ordj > 1) {
                            // Split-case degree formula for prime-power
                            // orders.
                            std::vector<std::uint64_t> fs = factor(ordj);
                            bool prime_power = true;
                            for (std::uint64_t f : fs) {
                                if (f != fs[0]) prime_power = false;
                            }
                            const std::uint64_t pp = fs[0];
                            if (prime_power && pp % 2 == 1 &&
                                (q - 1) % pp == 0) {
                                ++local.cases;
                                if (g.degree() !=
                                    min_poly_degree(q, pp, ordj)) {
                                    std::ostringstream os;
                                    os << mu.render() << " power " << j
                                       << ": split-case degree formula "
                                          "mismatch at order "
                                       << ordj;
                                    local.record_violation(os.str());
                                }
                            }
                        }
                    }
                    if (j < N) companion_step(F, M, negc, k);
                }
            }
        });
}

}  // namespace wb
