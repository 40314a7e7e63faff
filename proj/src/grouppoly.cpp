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

#include "wb/grouppoly.hpp"

#include <sstream>

#include "wb/numth.hpp"

namespace wb {

const char* family_name(Family f) noexcept {
    switch (f) {
        case Family::GL: return "GL";
        case Family::GU: return "GU";
        case Family::Sp: return "Sp";
        case Family::SpinPlus: return "Spin+";
        case Family::SpinMinus: return "Spin-";
    }
    return "?";
}

GroupDescriptor::GroupDescriptor(Family family_, unsigned n_,
                                 std::uint64_t q_)
    : family(family_), n(n_), q(q_) {
    if (!is_prime_power(q))
        throw Error(ErrorKind::InvalidDescriptor,
                    "q must be a prime power, got " + std::to_string(q));
    switch (family) {
        case Family::GL:
        case Family::GU:
            if (n < 1)
                throw Error(ErrorKind::InvalidDescriptor,
                            "GL/GU needs n >= 1");
            break;
        case Family::Sp:
            if (n < 4 || n % 2 != 0)
                throw Error(ErrorKind::InvalidDescriptor,
                            "Sp needs even n >= 4, got n = " +
                                std::to_string(n));
            if (n == 4 && q == 2)
                throw Error(ErrorKind::InvalidDescriptor,
                            "Sp_4(2) is refused: its isometry group is "
                            "not the group the reduction expects");
            break;
        case Family::SpinPlus:
            if (n % 2 == 0) {
                if (n < 8)
                    throw Error(ErrorKind::InvalidDescriptor,
                                "even spin needs n >= 8, got n = " +
                                    std::to_string(n));
            } else {
                if (n < 7)
                    throw Error(ErrorKind::InvalidDescriptor,
                                "odd spin needs n >= 7, got n = " +
                                    std::to_string(n));
                if (q % 2 == 0)
                    throw Error(ErrorKind::InvalidDescriptor,
                                "odd spin needs odd q");
            }
            break;
        case Family::SpinMinus:
            if (n < 8 || n % 2 != 0)
                throw Error(ErrorKind::InvalidDescriptor,
                            "minus-type spin needs even n >= 8, got n = " +
                                std::to_string(n));
            break;
    }
}

int GroupDescriptor::eps() const {
    if (family == Family::GL)
        return 1;
    if (family == Family::GU)
        return -1;
    throw Error(ErrorKind::InvalidDescriptor,
                "eps is defined only for GL/GU descriptors");
}

std::string GroupDescriptor::render() const {
    std::ostringstream os;
    os << family_name(family) << "_" << n << "(" << q << ")";
    return os.str();
}

mpz_class torus_order(int eps, unsigned n, std::uint64_t q) {
    if (eps != 1 && eps != -1)
        throw Error(ErrorKind::OutOfRange, "eps must be +1 or -1");
    const int eps_n = (eps == -1 && n % 2 == 1) ? -1 : 1;
    return mpz_pow(q, n) - eps_n;
}

namespace {

// q^{m(m-1)} (q^m - eps) prod_{i=1}^{m-1} (q^{2i} - 1): the order of
// SO^eps_{2m}(q) for odd q and of Omega^eps_{2m}(q) = Spin for even q.
mpz_class even_orthogonal_base(unsigned m, int eps, std::uint64_t q) {
    mpz_class out = mpz_pow(q, m * (m - 1));
    out *= mpz_pow(q, m) - eps;
    for (unsigned i = 1; i < m; ++i)
        out *= mpz_pow(q, 2 * i) - 1;
    return out;
}

// q^{m^2} prod_{i=1}^{m} (q^{2i} - 1): the order of SO_{2m+1}(q).
mpz_class odd_orthogonal_base(unsigned m, std::uint64_t q) {
    mpz_class out = mpz_pow(q, m * m);
    for (unsigned i = 1; i <= m; ++i)
        out *= mpz_pow(q, 2 * i) - 1;
    return out;
}

}  // namespace

mpz_class group_order(const GroupDescriptor& g) {
    switch (g.family) {
        case Family::GL:
        case Family::GU: {
            const int eps = g.eps();
            mpz_class out = mpz_pow(g.q, g.n * (g.n - 1) / 2);
            for (unsigned i = 1; i <= g.n; ++i) {
                const int eps_i = (eps == -1 && i % 2 == 1) ? -1 : 1;
                out *= mpz_pow(g.q, i) - eps_i;
            }
            return out;
        }
        case Family::Sp: {
            const unsigned m = g.n / 2;
            mpz_class out = mpz_pow(g.q, m * m);
            for (unsigned i = 1; i <= m; ++i)
                out *= mpz_pow(g.q, 2 * i) - 1;
            return out;
        }
        case Family::SpinPlus:
        case Family::SpinMinus: {
            // The spin order coincides with the SO-order base: the
            // halving from SO to Omega and the doubling from Omega to
            // Spin cancel for odd q, and both collapse for even q.
            if (g.n % 2 == 1)
                return odd_orthogonal_base(g.n / 2, g.q);
            return even_orthogonal_base(
                g.n / 2, g.family == Family::SpinPlus ? 1 : -1, g.q);
        }
    }
    throw Error(ErrorKind::InvalidDescriptor, "unknown family");
}

SpinOrderParts spin_order_parts(const GroupDescriptor& g) {
    if (g.family != Family::SpinPlus && g.family != Family::SpinMinus)
        throw Error(ErrorKind::InvalidDescriptor,
                    "spin order parts need a spin descriptor");
    SpinOrderParts parts;
    parts.kernel_order = g.q % 2 == 1 ? 2 : 1;
    parts.omega_order = group_order(g) / parts.kernel_order;
    return parts;
}

unsigned defect_exponent(int eps, unsigned n, std::uint64_t q,
                         std::uint64_t p) {
    if (eps != 1 && eps != -1)
        throw Error(ErrorKind::OutOfRange, "eps must be +1 or -1");
    if (n < 1)
        throw Error(ErrorKind::OutOfRange, "n must be >= 1");
    if (q < 2)
        throw Error(ErrorKind::OutOfRange, "q must be >= 2");
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw Error(ErrorKind::HypothesisViolation,
                    "p must be an odd prime, got " + std::to_string(p));
    const std::int64_t qeps = static_cast<std::int64_t>(q) - eps;
    if (qeps % static_cast<std::int64_t>(p) != 0)
        throw Error(ErrorKind::HypothesisViolation,
                    "p = " + std::to_string(p) + " must divide q - eps = " +
                        std::to_string(qeps));
    const unsigned a = padic_val(p, qeps);
    const unsigned aprime = padic_val(p, static_cast<std::int64_t>(n));
    const unsigned direct = padic_val(p, torus_order(eps, n, q));
    if (direct != a + aprime)
        throw Error(ErrorKind::HypothesisViolation,
                    "internal consistency failure: the torus-order "
                    "valuation disagrees with a + a'");
    return a + aprime;
}

std::vector<CentralizerScenario> centralizer_scenarios(
    const GroupDescriptor& g, std::uint64_t p) {
    if (g.family == Family::GL || g.family == Family::GU)
        throw Error(ErrorKind::InvalidDescriptor,
                    "centralizer scenarios apply to symplectic and spin "
                    "descriptors only");
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw Error(ErrorKind::HypothesisViolation,
                    "p must be an odd prime, got " + std::to_string(p));
    if (g.q % p == 0)
        throw Error(ErrorKind::BadCharacteristic,
                    "p divides q: the defining characteristic is out of "
                    "scope");

    const std::uint64_t e = mult_order(static_cast<std::int64_t>(g.q), p);
    const unsigned d =
        static_cast<unsigned>(e % 2 == 0 ? e / 2 : e);
    const int eps = e % 2 == 0 ? -1 : 1;
    const std::uint64_t q_reduced = checked_pow(g.q, d);

    std::vector<CentralizerScenario> out;
    for (std::uint64_t m = 1; 2 * m * d <= g.n; ++m) {
        const bool full_support = 2 * m * d == g.n;
        if (full_support) {
            if (g.family == Family::SpinPlus && eps == -1 && m % 2 != 0)
                continue;
            if (g.family == Family::SpinMinus && eps == -1 && m % 2 != 1)
                continue;
            if (g.family == Family::SpinMinus && eps == 1)
                continue;
        }
        CentralizerScenario s;
        s.d = d;
        s.m = m;
        s.eps = eps;
        s.q_reduced = q_reduced;
        s.type_constraint_on_subspace_only =
            !full_support && g.family != Family::Sp;
        out.push_back(s);
    }
    return out;
}

}  // namespace wb
