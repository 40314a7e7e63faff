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
#include <string>
#include <vector>

#include "wb/error.hpp"
#include "wb/report.hpp"

namespace wb {

/**
 * @brief Arithmetic table for a finite field of order Q = r^k <= 2^16.
 *
 * Elements are integer codes in [0, Q). The code of an element is its
 * coefficient vector over the prime field F_r written in base r, with
 * respect to the power basis of the lexicographically first monic
 * irreducible modulus of degree k. Code 0 is zero and code 1 is one.
 * Multiplication runs through exp/log tables of a fixed generator.
 */
class FieldElementTable {
  public:
    explicit FieldElementTable(std::uint32_t order);

    std::uint32_t order() const { return q_; }
    std::uint32_t characteristic() const { return r_; }
    unsigned degree() const { return k_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    /** @brief A fixed generator of the multiplicative group. */
    std::uint32_t generator() const { return gen_; }

    /** @brief Multiplicative order of a != 0 (out-of-range on zero). */
    std::uint64_t element_order(std::uint32_t a) const;

  private:
    std::uint32_t q_ = 0, r_ = 0, gen_ = 0;
    unsigned k_ = 0;
    std::vector<std::uint32_t> exp_, log_;
};

/**
 * @brief Monic polynomial over a finite field, degree >= 1.
 *
 * coeffs[i] is the coefficient of x^i as a field code; the leading
 * coefficient is 1. field_order records the intended coefficient field.
 */
struct MonicPoly {
    std::uint32_t field_order = 0;
    std::vector<std::uint32_t> coeffs;

    MonicPoly(std::uint32_t order, std::vector<std::uint32_t> cs);

    unsigned degree() const {
        return static_cast<unsigned>(coeffs.size()) - 1;
    }

    bool operator==(const MonicPoly& other) const = default;

    /**
     * @brief The index-th monic polynomial of the given degree, in
     * lexicographic order of (c_{e-1}, ..., c_0); index < Q^degree.
     */
    static MonicPoly from_index(std::uint32_t order, unsigned degree,
                                std::uint64_t index);

    std::string render() const;
};

/** @brief Lexicographically first monic irreducible of the degree. */
MonicPoly find_irreducible(const FieldElementTable& F, unsigned degree);

bool is_irreducible(const FieldElementTable& F, const MonicPoly& f);

std::uint32_t poly_eval(const FieldElementTable& F, const MonicPoly& f,
                        std::uint32_t x);

/** @brief a*b reduced modulo f; a, b little-endian, degrees < deg f. */
std::vector<std::uint32_t> poly_mulmod(const FieldElementTable& F,
                                       const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b,
                                       const MonicPoly& f);

/** @brief base^e modulo f. */
std::vector<std::uint32_t> poly_powmod(const FieldElementTable& F,
                                       const std::vector<std::uint32_t>& base,
                                       std::uint64_t e, const MonicPoly& f);

/**
 * @brief Multiplicative order of x modulo f.
 *
 * Requires f irreducible with f(0) != 0, and Q^deg(f) within 64 bits
 * (out-of-range otherwise).
 */
std::uint64_t root_order(const FieldElementTable& F, const MonicPoly& f);

/**
 * @brief The reciprocal normalisation f*(x) = f(0)^{-1} x^e f(1/x).
 *
 * Sends the root set to its inverses. Requires f(0) != 0
 * (non-invertible-root otherwise). An involution on the monic
 * polynomials it is defined on.
 */
MonicPoly star_involution(const FieldElementTable& F, const MonicPoly& f);

/**
 * @brief The twisted reciprocal over F_{q^2}: roots map to zeta^{-q}.
 *
 * F must be the field of order q^2 (inconsistent-field otherwise);
 * coefficients undergo the q-power Frobenius after the reciprocal
 * normalisation. An involution since the q-Frobenius squares to the
 * identity relative to the reciprocal twist.
 */
MonicPoly dagger_involution(const FieldElementTable& F, const MonicPoly& f,
                            std::uint32_t q);

/**
 * @brief Arithmetic in F_Q[y]/(h) for monic irreducible h of degree e.
 *
 * Elements are little-endian coefficient vectors of length e over the
 * base table. When h is irreducible this is the field with Q^e
 * elements; the base field sits inside as the constant vectors.
 * Multiplicative orders are computed against Q^e - 1, which must fit
 * in 64 bits (out-of-range otherwise).
 */
class QuotientField {
  public:
    using Elem = std::vector<std::uint32_t>;

    QuotientField(const FieldElementTable& base, MonicPoly modulus);

    const FieldElementTable& base() const { return *F_; }
    unsigned extension_degree() const { return e_; }
    std::uint64_t order() const { return order_; }
    std::uint64_t unit_group_order() const { return order_ - 1; }

    Elem zero() const;
    Elem one() const;
    Elem from_base(std::uint32_t c) const;
    Elem gen() const;  // the class of y

    bool is_zero(const Elem& a) const;
    bool is_base(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, std::uint64_t e) const;

    std::uint64_t element_order(const Elem& a) const;

    /**
     * @brief Some element of exact multiplicative order n.
     *
     * n must divide Q^e - 1 (hypothesis-violation otherwise). Found by
     * deterministic ascending enumeration, so repeat calls agree.
     */
    Elem element_of_order(std::uint64_t n) const;

    /**
     * @brief Minimal polynomial of a over the base field.
     *
     * Computed as the product of (x - a^{Q^i}) over the Frobenius
     * orbit; the coefficients necessarily land in the base field.
     */
    MonicPoly min_poly(const Elem& a) const;

  private:
    const FieldElementTable* F_;
    MonicPoly h_;
    unsigned e_;
    std::uint64_t order_;
    std::vector<std::uint64_t> unit_primes_;
};

/**
 * @brief Degree over F_Q of the minimal polynomial of an element of
 * order zeta_order = p^e, when p divides Q - 1.
 *
 * Equals 1 for e <= a and p^{e-a} otherwise, where a is the p-adic
 * valuation of Q - 1. zeta_order must be a power of the odd prime p
 * and p must divide Q - 1 (hypothesis-violation otherwise).
 */
std::uint64_t min_poly_degree(std::uint64_t Q, std::uint64_t p,
                              std::uint64_t zeta_order);

/**
 * @brief Determinant exponent of a semisimple block with irreducible
 * minimal polynomial.
 *
 * For nprime Jordan-free blocks of the companion matrix of a degree d
 * irreducible with root zeta of order zeta_order, the determinant is
 * zeta raised to nprime * (Q^d - 1)/(Q - 1); this returns that
 * exponent reduced modulo zeta_order. d = 0 is refused (degenerate).
 */
std::uint64_t det_of_irreducible_semisimple(std::uint64_t zeta_order,
                                            std::uint64_t Q, unsigned d,
                                            std::uint64_t nprime);

/**
 * @brief Checks the degree facts for irreducibles with a root of odd
 * prime order p over F_q.
 *
 * Generates every monic irreducible over F_q of degree <= degree_bound
 * whose roots have order exactly p (from root orbits in a quotient
 * field, so the generation does not presuppose the claims), then
 * checks each: the degree equals the order of q modulo p; when the
 * degree e is even, p divides q^{e/2} + 1 and the polynomial is fixed
 * by the reciprocal involution; conversely any generated polynomial
 * fixed by the involution has even degree. Also checks the generated
 * family is complete, i.e. has (p-1)/e members when e <= degree_bound.
 *
 * Requires p odd prime not dividing q, q <= 16 a prime power and
 * degree_bound <= 8.
 */
VerifyReport verify_degree_lemma(std::uint32_t q, std::uint64_t p,
                                 unsigned degree_bound);

/**
 * @brief Checks that odd-degree irreducibles over F_{q^2} with roots of
 * p-power order are fixed by the twisted reciprocal, for p | q + 1.
 *
 * The qualifying polynomials have degree a power of p, so within an
 * odd degree_bound <= 8 only degrees 1 and p occur; both families are
 * generated exhaustively from root orbits and each member is checked
 * for dagger-fixedness, irreducibility and root order. Requires
 * p | q + 1 (hypothesis-violation) and q^2 <= 2^16 (out-of-range).
 */
VerifyReport verify_unitary_lemma(std::uint32_t q, std::uint64_t p,
                                  unsigned degree_bound);

}  // namespace wb
