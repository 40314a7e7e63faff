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
#include <functional>
#include <sstream>
#include <vector>

#include "verify_util.hpp"
#include "wb/dade.hpp"
#include "wb/error.hpp"
#include "wb/grouppoly.hpp"
#include "wb/numth.hpp"
#include "wb/pipeline.hpp"
#include "wb/signs.hpp"
#include "wb/verify.hpp"

namespace wb {

namespace {

using detail::chunked_sweep;
using detail::odd_primes_upto;
using detail::prime_powers_upto;

constexpr const char* kFixedSpaceStep = "fixed-space-reduction";
constexpr const char* kLevelStep = "centralizer-level-reduction";

std::uint64_t characteristic_of(std::uint64_t q) {
    std::uint64_t r = 0;
    is_prime_power(q, &r);
    return r;
}

using detail::raises;

bool chain_has(const std::vector<std::string>& chain, const char* step) {
    return std::find(chain.begin(), chain.end(), step) != chain.end();
}

}  // namespace

VerifyReport verify_sign_kernel(bool parallel) {
    struct Chunk {
        std::uint64_t p;
        unsigned l;
    };
    std::vector<Chunk> chunks;
    for (std::uint64_t p : {3, 5}) {
        for (unsigned l = 1; l <= 16; ++l) chunks.push_back({p, l});
    }

    return chunked_sweep(
        "dade/sign-kernel", chunks.size(), parallel,
        [&](std::size_t ci, VerifyReport& local) {
            const auto [p, l] = chunks[ci];
            const CyclicPGroupShape shape(p, l);

            std::vector<DadeLabel> basis;
            std::vector<SignVector> basis_omega;
            for (unsigned j = 0; j < l; ++j) {
                basis.emplace_back(shape, std::uint64_t{1} << j);
                basis_omega.push_back(omega_lambda(basis.back()));
            }

            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << l);
                 ++bits) {
                const DadeLabel x(shape, bits);
                const SignVector v = omega_lambda(x);

                ++local.cases;
                if (!(invert_omega(v, p) == x)) {
                    std::ostringstream os;
                    os << "sign map not invertible at bits=" << bits
                       << " l=" << l << " p=" << p;
                    local.record_violation(os.str());
                }

                ++local.cases;
                if (!(omega_operator(x) == add_labels(x, basis[0]))) {
                    std::ostringstream os;
                    os << "syzygy operator disagrees with adding index 0 at "
                          "bits="
                       << bits << " l=" << l;
                    local.record_violation(os.str());
                }

                for (unsigned j = 0; j < l; ++j) {
                    const SignVector w = omega_lambda(add_labels(x, basis[j]));
                    bool hom = true;
                    for (unsigned i = 1; i <= l; ++i) {
                        if (w.at(i) != v.at(i) * basis_omega[j].at(i)) {
                            hom = false;
                            break;
                        }
                    }
                    ++local.cases;
                    if (!hom) {
                        std::ostringstream os;
                        os << "sign map not multiplicative at bits=" << bits
                           << " + e_" << j << ", l=" << l;
                        local.record_violation(os.str());
                    }
                }
            }

            for (unsigned a = 0; a < l; ++a) {
                for (unsigned b = a; b < l; ++b) {
                    const SignVector v =
                        omega_lambda(interval_label(a, b, l, p));
                    bool match = true;
                    for (unsigned i = 1; i <= l; ++i) {
                        if (v.at(i) != omega_of_interval_closed_form(a, b, l,
                                                                     i)) {
                            match = false;
                            break;
                        }
                    }
                    ++local.cases;
                    if (!match) {
                        std::ostringstream os;
                        os << "interval [" << a << "," << b << "] over l=" << l
                           << ": closed-form signs disagree";
                        local.record_violation(os.str());
                    }
                }
            }

            ++local.cases;
            if (!interval_label(l, l - 1, l, p).empty()) {
                local.record_violation("empty-interval convention broken at l=" +
                                       std::to_string(l));
            }
            ++local.cases;
            if (!raises([&] { interval_label(0, l, l, p); },
                        ErrorKind::OutOfRange)) {
                local.record_violation(
                    "interval endpoint past the index set not refused at l=" +
                    std::to_string(l));
            }
            ++local.cases;
            if (!raises(
                    [&] {
                        add_labels(DadeLabel(shape),
                                   DadeLabel(CyclicPGroupShape(p, l + 1)));
                    },
                    ErrorKind::IncompatibleShapes)) {
                local.record_violation(
                    "mixed-shape addition not refused at l=" +
                    std::to_string(l));
            }
        });
}

VerifyReport verify_deflation(bool parallel) {
    struct Chunk {
        std::uint64_t p;
        unsigned l;
    };
    std::vector<Chunk> chunks;
    for (std::uint64_t p : {3, 5}) {
        for (unsigned l = 2; l <= 10; ++l) chunks.push_back({p, l});
    }

    return chunked_sweep(
        "dade/deflation", chunks.size(), parallel,
        [&](std::size_t ci, VerifyReport& local) {
            const auto [p, l] = chunks[ci];
            const CyclicPGroupShape shape(p, l);

            for (unsigned a = 1; a < l; ++a) {
                const CyclicPGroupShape quotient(p, l - a);

                for (std::uint64_t t = 0;
                     t < (std::uint64_t{1} << (l - a)); ++t) {
                    const DadeLabel x(shape, t << a);
                    const DadeLabel xd = deflate_label(x, a);

                    ++local.cases;
                    if (!(xd.shape() == quotient) || xd.contains(0) ||
                        xd.bits() != ((t << a >> a) & ~std::uint64_t{1})) {
                        std::ostringstream os;
                        os << "deflation bookkeeping wrong at bits="
                           << (t << a) << " a=" << a << " l=" << l;
                        local.record_violation(os.str());
                    }

                    ++local.cases;
                    if (!(inflate_label(xd, a, x.contains(a) ? 1 : 0) == x)) {
                        std::ostringstream os;
                        os << "inflation does not recover bits=" << (t << a)
                           << " a=" << a << " l=" << l;
                        local.record_violation(os.str());
                    }
                }

                for (std::uint64_t u = 0;
                     u < (std::uint64_t{1} << (l - a)); ++u) {
                    const DadeLabel xbar(quotient, u);
                    for (int fl : {0, 1}) {
                        ++local.cases;
                        if (deflate_label(inflate_label(xbar, a, fl), a)
                                .bits() != (u & ~std::uint64_t{1})) {
                            std::ostringstream os;
                            os << "deflate-after-inflate lost bits at u=" << u
                               << " a=" << a << " flag=" << fl << " l=" << l;
                            local.record_violation(os.str());
                        }
                    }
                }

                ++local.cases;
                if (!raises(
                        [&, a] {
                            deflate_label(DadeLabel(shape, std::uint64_t{1}),
                                          a);
                        },
                        ErrorKind::InvalidDomination)) {
                    local.record_violation(
                        "deflation of a non-dominated label not refused at "
                        "a=" +
                        std::to_string(a));
                }
            }

            ++local.cases;
            if (!raises([&] { deflate_label(DadeLabel(shape), 0); },
                        ErrorKind::OutOfRange) ||
                !raises([&] { deflate_label(DadeLabel(shape), l); },
                        ErrorKind::OutOfRange)) {
                local.record_violation(
                    "deflation depth bounds not enforced at l=" +
                    std::to_string(l));
            }
        });
}

VerifyReport verify_sign_sequences(bool parallel) {
    struct Chunk {
        std::uint64_t p;
        int eps;
    };
    std::vector<Chunk> chunks;
    for (std::uint64_t p : {3, 7, 11, 19}) {
        for (int eps : {1, -1}) chunks.push_back({p, eps});
    }

    return chunked_sweep(
        "signs/oracle-interval", chunks.size(), parallel,
        [&](std::size_t ci, VerifyReport& local) {
            const auto [p, eps] = chunks[ci];

            for (std::uint64_t m = 1; m <= 99; ++m) {
                if (m % p == 0) continue;
                for (unsigned b = 0; b <= 3; ++b) {
                    const int sign = omega_g_of_tower_element(
                        GLTowerElement(eps, m, 3, 1, p, b));
                    const int expect = (eps == -1 && m % 2 == 1 &&
                                        b % 2 == 1 && p % 4 == 3)
                                           ? -1
                                           : 1;
                    ++local.cases;
                    if (sign != expect) {
                        std::ostringstream os;
                        os << "tower sign at eps=" << eps << " m=" << m
                           << " b=" << b << " p=" << p << ": got " << sign;
                        local.record_violation(os.str());
                    }
                }

                for (unsigned a = 1; a <= 3; ++a) {
                    for (unsigned aprime = 0; aprime <= 3; ++aprime) {
                        const unsigned l = a + aprime;
                        for (unsigned e = 0; e <= aprime; ++e) {
                            const SignVector v = sign_sequence_oracle(
                                eps, m, aprime, a, l, e, p);
                            const auto [lo, hi] =
                                interval_form(eps, m, a, e, l, p);
                            const DadeLabel want =
                                interval_label(lo, hi, l, p);

                            ++local.cases;
                            if (!(label_from_sign_sequence(v, p) == want)) {
                                std::ostringstream os;
                                os << "oracle label differs from interval "
                                      "form at eps="
                                   << eps << " m=" << m << " a=" << a
                                   << " a'=" << aprime << " e=" << e
                                   << " p=" << p;
                                local.record_violation(os.str());
                            }

                            bool entries_ok = true;
                            for (unsigned i = 1; i <= l; ++i) {
                                const int want_i =
                                    lo <= hi ? omega_of_interval_closed_form(
                                                   lo, hi, l, i)
                                             : 1;
                                if (v.at(i) != want_i) {
                                    entries_ok = false;
                                    break;
                                }
                            }
                            ++local.cases;
                            if (!entries_ok) {
                                std::ostringstream os;
                                os << "oracle entries off the closed form at "
                                      "eps="
                                   << eps << " m=" << m << " a=" << a
                                   << " a'=" << aprime << " e=" << e
                                   << " p=" << p;
                                local.record_violation(os.str());
                            }
                        }
                    }
                }
            }

            ++local.cases;
            if (!raises(
                    [&] { sign_sequence_oracle(eps, 1, 1, 2, 3, 2, p); },
                    ErrorKind::InvalidExponent)) {
                local.record_violation(
                    "oracle exponent bound not enforced at p=" +
                    std::to_string(p));
            }
            ++local.cases;
            if (!raises(
                    [&] { sign_sequence_oracle(eps, 1, 2, 1, 2, 2, p); },
                    ErrorKind::HypothesisViolation)) {
                local.record_violation(
                    "oracle length bound not enforced at p=" +
                    std::to_string(p));
            }
        });
}

VerifyReport verify_group_orders(bool parallel) {
    const std::vector<std::uint64_t> fields = {2, 3, 4, 5, 7, 8, 9};

    return chunked_sweep(
        "grouppoly/orders", fields.size(), parallel,
        [&](std::size_t ci, VerifyReport& local) {
            const std::uint64_t q = fields[ci];

            for (unsigned n = 1; n <= 8; ++n) {
                for (Family fam : {Family::GL, Family::GU}) {
                    const GroupDescriptor g(fam, n, q);
                    const int eps = g.eps();
                    ++local.cases;
                    if (group_order(g) % torus_order(eps, n, q) != 0) {
                        local.record_violation(
                            "torus order does not divide " + g.render());
                    }
                }
                const mpz_class gu = group_order(
                    GroupDescriptor(Family::GU, n, q));
                const mpz_class gl2 = group_order(
                    GroupDescriptor(Family::GL, n, q * q));
                ++local.cases;
                if (gl2 % gu != 0) {
                    std::ostringstream os;
                    os << "GU_" << n << "(" << q
                       << ") does not embed by order into GL_" << n << "("
                       << q * q << ")";
                    local.record_violation(os.str());
                }
            }

            std::vector<GroupDescriptor> spins;
            for (unsigned n : {8, 10, 12}) {
                spins.emplace_back(Family::SpinPlus, n, q);
                spins.emplace_back(Family::SpinMinus, n, q);
            }
            if (q % 2 == 1) {
                for (unsigned n : {7, 9, 11}) {
                    spins.emplace_back(Family::SpinPlus, n, q);
                }
            }
            for (const GroupDescriptor& g : spins) {
                const SpinOrderParts parts = spin_order_parts(g);
                ++local.cases;
                if (parts.omega_order * parts.kernel_order != group_order(g)) {
                    local.record_violation("cover split wrong for " +
                                           g.render());
                }
                ++local.cases;
                if (parts.kernel_order != (q % 2 == 1 ? 2u : 1u)) {
                    local.record_violation("cover kernel wrong for " +
                                           g.render());
                }
            }
            if (q % 2 == 1) {
                for (unsigned n : {7, 9, 11}) {
                    ++local.cases;
                    if (group_order(GroupDescriptor(Family::SpinPlus, n, q)) !=
                        group_order(GroupDescriptor(Family::Sp, n - 1, q))) {
                        std::ostringstream os;
                        os << "type B/C order coincidence fails at n=" << n
                           << " q=" << q;
                        local.record_violation(os.str());
                    }
                }
            }
        });
}

VerifyReport verify_defect_exponents(bool parallel) {
    struct Chunk {
        int eps;
        std::uint64_t q;
    };
    std::vector<Chunk> chunks;
    for (int eps : {1, -1}) {
        for (std::uint64_t q = 2; q <= 50; ++q) chunks.push_back({eps, q});
    }
    const std::vector<std::uint64_t> primes = odd_primes_upto(47);

    return chunked_sweep(
        "grouppoly/defect-exponents", chunks.size(), parallel,
        [&](std::size_t ci, VerifyReport& local) {
            const auto [eps, q] = chunks[ci];
            for (std::uint64_t p : primes) {
                const std::uint64_t shifted = eps == 1 ? q - 1 : q + 1;
                if (shifted % p != 0) continue;
                const unsigned a =
                    padic_val(p, static_cast<std::int64_t>(shifted));
                for (unsigned n = 1; n <= 60; ++n) {
                    const unsigned got = defect_exponent(eps, n, q, p);
                    ++local.cases;
                    if (got != a + padic_val(p, static_cast<std::int64_t>(n))) {
                        std::ostringstream os;
                        os << "defect exponent closed form fails at eps="
                           << eps << " n=" << n << " q=" << q << " p=" << p;
                        local.record_violation(os.str());
                    }
                    ++local.cases;
                    if (got != padic_val(p, torus_order(eps, n, q))) {
                        std::ostringstream os;
                        os << "defect exponent vs torus valuation fails at "
                              "eps="
                           << eps << " n=" << n << " q=" << q << " p=" << p;
                        local.record_violation(os.str());
                    }
                }
            }
        });
}

VerifyReport verify_scenario_constraints(bool parallel) {
    std::vector<GroupDescriptor> groups;
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        for (unsigned n = 4; n <= 24; n += 2) {
            if (n == 4 && q == 2) continue;
            groups.emplace_back(Family::Sp, n, q);
        }
        for (unsigned n = 8; n <= 24; n += 2) {
            groups.emplace_back(Family::SpinPlus, n, q);
            groups.emplace_back(Family::SpinMinus, n, q);
        }
        if (q % 2 == 1) {
            for (unsigned n = 7; n <= 23; n += 2) {
                groups.emplace_back(Family::SpinPlus, n, q);
            }
        }
    }
    const std::vector<std::uint64_t> primes = odd_primes_upto(31);

    return chunked_sweep(
        "grouppoly/scenarios", groups.size(), parallel,
        [&](std::size_t ci, VerifyReport& local) {
            const GroupDescriptor& g = groups[ci];
            const std::uint64_t q = g.q;
            const std::uint64_t chr = characteristic_of(q);

            for (std::uint64_t p : primes) {
                if (p == chr) continue;
                const std::uint64_t e =
                    mult_order(static_cast<std::int64_t>(q), p);
                const unsigned d = static_cast<unsigned>(e % 2 == 0 ? e / 2
                                                                    : e);
                const int eps = e % 2 == 0 ? -1 : 1;

                const std::vector<CentralizerScenario> scenarios =
                    centralizer_scenarios(g, p);

                std::vector<std::uint64_t> seen;
                for (const CentralizerScenario& sc : scenarios) {
                    seen.push_back(sc.m);
                    ++local.cases;
                    if (sc.d != d || sc.eps != eps ||
                        sc.q_reduced != checked_pow(q, d)) {
                        std::ostringstream os;
                        os << g.render() << " p=" << p
                           << ": scenario level data wrong at m=" << sc.m;
                        local.record_violation(os.str());
                    }
                    ++local.cases;
                    if ((mpz_pow(q, d) - eps) % p != 0) {
                        std::ostringstream os;
                        os << g.render() << " p=" << p
                           << ": p does not divide q^d - eps at m=" << sc.m;
                        local.record_violation(os.str());
                    }
                    ++local.cases;
                    const std::uint64_t dim = 2 * sc.m * d;
                    if (dim > g.n ||
                        sc.type_constraint_on_subspace_only !=
                            (dim < g.n && g.family != Family::Sp)) {
                        std::ostringstream os;
                        os << g.render() << " p=" << p
                           << ": support bookkeeping wrong at m=" << sc.m;
                        local.record_violation(os.str());
                    }
                }

                std::vector<std::uint64_t> expected;
                for (std::uint64_t m = 1; 2 * m * d <= g.n; ++m) {
                    const bool full = 2 * m * d == g.n;
                    bool admit = true;
                    if (full && g.family != Family::Sp) {
                        if (eps == -1) {
                            admit = g.family == Family::SpinPlus
                                        ? m % 2 == 0
                                        : m % 2 == 1;
                        } else {
                            admit = g.family == Family::SpinPlus;
                        }
                    }
                    if (admit) expected.push_back(m);
                }
                ++local.cases;
                if (seen != expected) {
                    std::ostringstream os;
                    os << g.render() << " p=" << p
                       << ": multiplicity set has " << seen.size()
                       << " entries, expected " << expected.size();
                    local.record_violation(os.str());
                }
            }

            if (chr % 2 == 1) {
                ++local.cases;
                if (!raises([&] { centralizer_scenarios(g, chr); },
                            ErrorKind::BadCharacteristic)) {
                    local.record_violation(
                        "defining characteristic not refused for " +
                        g.render());
                }
            }
        });
}

VerifyReport verify_crucial_case_oracle(bool parallel) {
    const std::vector<std::uint64_t> fields = prime_powers_upto(30);
    const std::vector<std::uint64_t> primes = odd_primes_upto(31);

    return chunked_sweep(
        "pipeline/crucial-oracle", fields.size(), parallel,
        [&](std::size_t ci, VerifyReport& local) {
            const std::uint64_t q = fields[ci];
            for (std::uint64_t p : primes) {
                if ((q + 1) % p != 0) continue;
                const unsigned a =
                    padic_val(p, static_cast<std::int64_t>(q + 1));
                for (unsigned n = 2; n <= 50; ++n) {
                    const WReport r = w_base(-1, n, q, p);
                    const unsigned aprime =
                        padic_val(p, static_cast<std::int64_t>(n));
                    const unsigned l = a + aprime;
                    const std::uint64_t m = n / checked_pow(p, aprime);

                    const DadeLabel oracle = label_from_sign_sequence(
                        sign_sequence_oracle(-1, m, aprime, a, l, aprime, p),
                        p);
                    ++local.cases;
                    if (!(r.label == oracle)) {
                        std::ostringstream os;
                        os << "closed form vs sign-sequence oracle differ at "
                              "GU_"
                           << n << "(" << q << ") p=" << p;
                        local.record_violation(os.str());
                    }
                    ++local.cases;
                    if (r.defect_exponent != l ||
                        r.trivial != r.label.empty()) {
                        std::ostringstream os;
                        os << "defect/triviality bookkeeping wrong at GU_"
                           << n << "(" << q << ") p=" << p;
                        local.record_violation(os.str());
                    }
                }
            }
        });
}

VerifyReport verify_linear_triviality(bool parallel) {
    const std::vector<std::uint64_t> fields = prime_powers_upto(30);
    const std::vector<std::uint64_t> primes = odd_primes_upto(31);

    return chunked_sweep(
        "pipeline/linear-triviality", fields.size(), parallel,
        [&](std::size_t ci, VerifyReport& local) {
            const std::uint64_t q = fields[ci];
            for (std::uint64_t p : primes) {
                if (q == 1 || (q - 1) % p != 0) continue;
                const unsigned a =
                    padic_val(p, static_cast<std::int64_t>(q - 1));
                for (unsigned n = 2; n <= 50; ++n) {
                    const WReport r = w_base(1, n, q, p);
                    ++local.cases;
                    if (!r.trivial || !r.label.empty()) {
                        std::ostringstream os;
                        os << "split-form invariant not trivial at GL_" << n
                           << "(" << q << ") p=" << p;
                        local.record_violation(os.str());
                    }
                    ++local.cases;
                    if (r.defect_exponent !=
                        a + padic_val(p, static_cast<std::int64_t>(n))) {
                        std::ostringstream os;
                        os << "split-form defect wrong at GL_" << n << "("
                           << q << ") p=" << p;
                        local.record_violation(os.str());
                    }
                }
            }
        });
}

VerifyReport verify_label_support(bool parallel) {
    struct Chunk {
        Family family;
        std::uint64_t q;
    };
    std::vector<Chunk> chunks;
    for (Family fam : {Family::GL, Family::GU}) {
        for (std::uint64_t q : {2, 3, 4, 5, 8, 9}) chunks.push_back({fam, q});
    }
    const std::vector<std::uint64_t> primes = {3, 5, 7, 11, 13};

    return chunked_sweep(
        "pipeline/label-support", chunks.size(), parallel,
        [&](std::size_t ci, VerifyReport& local) {
            const auto [fam, q] = chunks[ci];
            const std::uint64_t chr = characteristic_of(q);
            const int eps = fam == Family::GL ? 1 : -1;

            for (unsigned n = 1; n <= 30; ++n) {
                const GroupDescriptor g(fam, n, q);
                for (std::uint64_t p : primes) {
                    if (p == chr) continue;
                    const std::uint64_t d = mult_order(
                        eps * static_cast<std::int64_t>(q), p);
                    const std::vector<WReport> reports =
                        enumerate_scenarios(g, p);

                    ++local.cases;
                    const std::size_t want_count =
                        d > 1 ? n / d : 1;
                    if (reports.size() != want_count) {
                        std::ostringstream os;
                        os << g.render() << " p=" << p << ": "
                           << reports.size() << " scenarios, expected "
                           << want_count;
                        local.record_violation(os.str());
                    }

                    for (const WReport& r : reports) {
                        const unsigned l = r.defect_exponent;
                        const unsigned aprime = r.scenario.aprime;

                        ++local.cases;
                        if (r.trivial != r.label.empty() ||
                            r.scenario.support_dim > n ||
                            (d > 1 && r.scenario.support_dim % d != 0)) {
                            std::ostringstream os;
                            os << g.render() << " p=" << p
                               << ": scenario bookkeeping wrong at support "
                               << r.scenario.support_dim;
                            local.record_violation(os.str());
                        }

                        if (!r.trivial) {
                            const unsigned a = l - aprime;
                            ++local.cases;
                            if (aprime == 0 || a == 0 ||
                                !(r.label ==
                                  interval_label(a, a + aprime - 1, l, p))) {
                                std::ostringstream os;
                                os << g.render() << " p=" << p
                                   << ": label is not the expected interval "
                                      "at support "
                                   << r.scenario.support_dim;
                                local.record_violation(os.str());
                            } else {
                                ++local.cases;
                                const DadeLabel deflated =
                                    deflate_label(r.label, a);
                                if (!(deflated == interval_label(
                                                      1, aprime - 1, l - a,
                                                      p))) {
                                    std::ostringstream os;
                                    os << g.render() << " p=" << p
                                       << ": deflation along the center is "
                                          "not the shifted interval";
                                    local.record_violation(os.str());
                                }
                            }
                        }

                        ++local.cases;
                        const bool shrunk = r.scenario.support_dim < n;
                        if (shrunk != (!r.chain.empty() &&
                                       r.chain.front() == kFixedSpaceStep)) {
                            std::ostringstream os;
                            os << g.render() << " p=" << p
                               << ": fixed-space step mislabeled at support "
                               << r.scenario.support_dim;
                            local.record_violation(os.str());
                        }
                        ++local.cases;
                        if ((r.scenario.d > 1) !=
                            chain_has(r.chain, kLevelStep)) {
                            std::ostringstream os;
                            os << g.render() << " p=" << p
                               << ": level-reduction step mislabeled at "
                                  "support "
                               << r.scenario.support_dim;
                            local.record_violation(os.str());
                        }
                    }
                }
            }
        });
}

VerifyReport verify_classical_reduction(bool parallel) {
    struct Chunk {
        Family family;
        std::uint64_t q;
    };
    std::vector<Chunk> chunks;
    for (Family fam : {Family::Sp, Family::SpinPlus, Family::SpinMinus}) {
        for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) chunks.push_back({fam, q});
    }
    const std::vector<std::uint64_t> primes = odd_primes_upto(31);

    return chunked_sweep(
        "pipeline/classical-reduction", chunks.size(), parallel,
        [&](std::size_t ci, VerifyReport& local) {
            const auto [fam, q] = chunks[ci];
            const std::uint64_t chr = characteristic_of(q);

            std::vector<unsigned> dims;
            if (fam == Family::Sp) {
                for (unsigned n = 4; n <= 48; n += 2) {
                    if (n == 4 && q == 2) continue;
                    dims.push_back(n);
                }
            } else {
                for (unsigned n = 8; n <= 48; n += 2) dims.push_back(n);
                if (fam == Family::SpinPlus && q % 2 == 1) {
                    for (unsigned n = 7; n <= 47; n += 2) dims.push_back(n);
                }
            }

            for (unsigned n : dims) {
                const GroupDescriptor g(fam, n, q);
                for (std::uint64_t p : primes) {
                    if (p == chr) continue;
                    for (const WReport& r : enumerate_scenarios(g, p)) {
                        const std::uint64_t nred = r.scenario.n_reduced;
                        const bool predicate =
                            r.scenario.eps_reduced == -1 && nred % 2 == 1 &&
                            nred % p == 0 && p % 4 == 3;
                        const bool hard_pair =
                            r.scenario.q_reduced == 2 && nred == 3;
                        const bool expect_nontrivial =
                            predicate && !hard_pair && nred > 2;

                        ++local.cases;
                        if (r.trivial == expect_nontrivial) {
                            std::ostringstream os;
                            os << g.render() << " p=" << p
                               << ": triviality contradicts the reduction "
                                  "criterion at m="
                               << r.scenario.m;
                            local.record_violation(os.str());
                        }

                        // the reported m is the p'-part of the reduced
                        // rank, so the support is 2 * d * m * p^aprime
                        ++local.cases;
                        std::uint64_t lifted = r.scenario.m;
                        for (unsigned i = 0; i < r.scenario.aprime; ++i)
                            lifted *= p;
                        if (lifted != nred ||
                            r.scenario.support_dim !=
                                2 * nred * r.scenario.d ||
                            r.scenario.support_dim > n) {
                            std::ostringstream os;
                            os << g.render() << " p=" << p
                               << ": support dimension wrong at m="
                               << r.scenario.m;
                            local.record_violation(os.str());
                        }

                        if (expect_nontrivial) {
                            ++local.cases;
                            const WReport base = w_base(
                                r.scenario.eps_reduced,
                                static_cast<unsigned>(nred),
                                r.scenario.q_reduced.get_ui(), p);
                            if (!(r.label == base.label) ||
                                r.defect_exponent != base.defect_exponent) {
                                std::ostringstream os;
                                os << g.render() << " p=" << p
                                   << ": reduced invariant disagrees with "
                                      "the split/unitary computation at m="
                                   << r.scenario.m;
                                local.record_violation(os.str());
                            }
                        }
                    }
                }
            }
        });
}

VerifyReport verify_bdr_reproduction(bool parallel) {
    return chunked_sweep(
        "pipeline/bdr", 1, parallel, [&](std::size_t, VerifyReport& local) {
            try {
                const BdrExampleReport rep = reproduce_bdr_example();
                local.cases += rep.checks.size();
                ++local.cases;
                if (rep.example.trivial || rep.example.label.empty()) {
                    local.record_violation(
                        "worked example unexpectedly trivial");
                }
            } catch (const Error& e) {
                ++local.cases;
                local.record_violation(e.what());
            }
        });
}

namespace {

struct SuiteSpec {
    const char* name;
    std::vector<VerifyReport (*)(bool)> verifiers;
};

const std::vector<SuiteSpec>& suite_table() {
    static const std::vector<SuiteSpec> table = {
        {"numth",
         {verify_valuation_identity, verify_floor_parity_lemma,
          verify_zsygmondy_search}},
        {"ffpoly",
         {verify_degree_families, verify_degree_families_brute,
          verify_unitary_families, verify_unitary_families_brute,
          verify_power_min_polys}},
        {"dade", {verify_sign_kernel, verify_deflation}},
        {"signs", {verify_sign_sequences}},
        {"grouppoly",
         {verify_group_orders, verify_defect_exponents,
          verify_scenario_constraints}},
        {"pipeline",
         {verify_crucial_case_oracle, verify_linear_triviality,
          verify_label_support, verify_classical_reduction,
          verify_bdr_reproduction}},
    };
    return table;
}

SuiteResult run_one(const SuiteSpec& spec, bool parallel) {
    SuiteResult result;
    result.name = spec.name;
    detail::Stopwatch sw;
    for (auto* fn : spec.verifiers) {
        result.reports.push_back(fn(parallel));
        result.ok = result.ok && result.reports.back().ok();
    }
    result.seconds = sw.seconds();
    return result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const SuiteSpec& spec : suite_table()) out.emplace_back(spec.name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, bool parallel) {
    if (name == "all") {
        SuiteResult all;
        all.name = "all";
        detail::Stopwatch sw;
        for (const SuiteSpec& spec : suite_table()) {
            SuiteResult part = run_one(spec, parallel);
            for (VerifyReport& r : part.reports) {
                all.reports.push_back(std::move(r));
            }
            all.ok = all.ok && part.ok;
        }
        all.seconds = sw.seconds();
        return all;
    }
    for (const SuiteSpec& spec : suite_table()) {
        if (name == spec.name) return run_one(spec, parallel);
    }
    throw Error(ErrorKind::OutOfRange, "unknown verification suite '" + name +
                                           "' (see suite_names)");
}

std::vector<SuiteResult> run_all_suites(bool parallel) {
    std::vector<SuiteResult> out;
    for (const SuiteSpec& spec : suite_table()) {
        out.push_back(run_one(spec, parallel));
    }
    return out;
}

}  // namespace wb
