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

#include "wb/signs.hpp"

#include "wb/numth.hpp"

namespace wb {

GLTowerElement::GLTowerElement(int eps_, std::uint64_t m_, unsigned aprime_,
                               unsigned a_, std::uint64_t p_, unsigned b_)
    : eps(eps_), m(m_), aprime(aprime_), a(a_), p(p_), b(b_) {
    if (eps != 1 && eps != -1)
        throw Error(ErrorKind::OutOfRange, "eps must be +1 or -1");
    if (m < 1)
        throw Error(ErrorKind::OutOfRange, "multiplicity m must be >= 1");
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw Error(ErrorKind::HypothesisViolation,
                    "p must be an odd prime, got " + std::to_string(p));
    if (m % p == 0)
        throw Error(ErrorKind::HypothesisViolation,
                    "multiplicity m must be prime to p");
}

std::uint64_t relative_rank(int eps, std::uint64_t m) {
    if (eps != 1 && eps != -1)
        throw Error(ErrorKind::OutOfRange, "eps must be +1 or -1");
    if (m < 1)
        throw Error(ErrorKind::OutOfRange, "degree must be >= 1");
    return eps == 1 ? m : m / 2;
}

int omega_g_of_tower_element(const GLTowerElement& x) {
    if (x.b > x.aprime)
        throw Error(ErrorKind::InvalidExponent,
                    "u_exponent b = " + std::to_string(x.b) +
                        " exceeds a' = " + std::to_string(x.aprime));
    if (x.b == 0)
        return 1;  // central element: the centralizer is the whole group
    const std::uint64_t big = x.m * checked_pow(x.p, x.aprime);
    const std::uint64_t small = x.m * checked_pow(x.p, x.aprime - x.b);
    const std::uint64_t total =
        relative_rank(x.eps, big) + relative_rank(x.eps, small);
    return total % 2 == 0 ? 1 : -1;
}

SignVector sign_sequence_oracle(int eps, std::uint64_t m, unsigned aprime,
                                unsigned a, unsigned l, unsigned e,
                                std::uint64_t p) {
    if (e >= l)
        throw Error(ErrorKind::HypothesisViolation,
                    "t_exponent e = " + std::to_string(e) +
                        " must be < l = " + std::to_string(l) +
                        " so that t^{p^{l-1}} is central");
    if (e > aprime)
        throw Error(ErrorKind::InvalidExponent,
                    "t_exponent e = " + std::to_string(e) +
                        " exceeds a' = " + std::to_string(aprime));
    std::vector<int> entries(l);
    for (unsigned j = 1; j <= l; ++j) {
        // u = t^{p^{l-j}} has order p^{max(0, a+e-(l-j))}.
        const unsigned drop = l - j;
        unsigned b = 0;
        if (a + e > drop && a + e - drop > a)
            b = a + e - drop - a;
        entries[j - 1] =
            omega_g_of_tower_element(GLTowerElement(eps, m, aprime, a, p, b));
    }
    return SignVector(std::move(entries));
}

std::pair<unsigned, unsigned> interval_form(int eps, std::uint64_t m,
                                            unsigned a, unsigned a2,
                                            unsigned l, std::uint64_t p) {
    (void)a;
    if (eps != 1 && eps != -1)
        throw Error(ErrorKind::OutOfRange, "eps must be +1 or -1");
    if (m < 1)
        throw Error(ErrorKind::OutOfRange, "multiplicity m must be >= 1");
    if (l < 1 || l > 64)
        throw Error(ErrorKind::OutOfRange, "l must lie in [1, 64]");
    if (a2 > l)
        throw Error(ErrorKind::OutOfRange,
                    "support width a2 exceeds l");
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw Error(ErrorKind::HypothesisViolation,
                    "p must be an odd prime, got " + std::to_string(p));
    if (eps == -1 && m % 2 == 1 && p % 4 == 3)
        return {l - a2, l - 1};
    return {l, l - 1};
}

DadeLabel label_from_sign_sequence(const SignVector& v, std::uint64_t p) {
    return invert_omega(v, p);
}

}  // namespace wb
