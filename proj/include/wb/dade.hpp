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

namespace wb {

/**
 * @brief Shape of a cyclic p-group D of order p^l, l >= 1, p an odd prime.
 *
 * D_j denotes the subgroup of order p^j; the index set for labels is
 * Lambda = {0, ..., l-1}.
 */
struct CyclicPGroupShape {
    std::uint64_t p;
    unsigned l;

    CyclicPGroupShape(std::uint64_t p_, unsigned l_);

    bool operator==(const CyclicPGroupShape&) const = default;
};

/**
 * @brief An element of the Dade group of a cyclic p-group.
 *
 * The group is elementary abelian of rank l; a label is the subset
 * A of Lambda = {0, ..., l-1} selecting which relative syzygies
 * Omega_{D/D_j} enter the endo-permutation module W_D(A). The empty
 * set is the trivial module k. Indices here run 0..l-1; the companion
 * SignVector runs 1..l, and the off-by-one is intentional and confined
 * to this module.
 */
class DadeLabel {
  public:
    DadeLabel(CyclicPGroupShape shape, std::uint64_t bits = 0);

    const CyclicPGroupShape& shape() const { return shape_; }
    std::uint64_t bits() const { return bits_; }
    unsigned length() const { return shape_.l; }

    bool contains(unsigned j) const {
        return j < shape_.l && ((bits_ >> j) & 1u) != 0;
    }
    bool empty() const { return bits_ == 0; }

    /** @brief Member indices in ascending order. */
    std::vector<unsigned> indices() const;

    bool operator==(const DadeLabel&) const = default;

  private:
    CyclicPGroupShape shape_;
    std::uint64_t bits_;
};

/**
 * @brief A vector in {-1, +1}^l, indexed 1..l.
 *
 * Matches the one-based convention of the sign sequences it models;
 * entry zero does not exist. Entries are strictly +1 or -1.
 */
class SignVector {
  public:
    explicit SignVector(std::vector<int> entries);

    unsigned length() const {
        return static_cast<unsigned>(entries_.size());
    }

    /** @brief Entry i for 1 <= i <= l (out-of-range otherwise). */
    int at(unsigned i) const;

    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const SignVector&) const = default;

  private:
    std::vector<int> entries_;
};

/**
 * @brief The sign-vector image of a label.
 *
 * Entry i (1 <= i <= l) is +1 exactly when the prefix sum
 * alpha_0 + ... + alpha_{i-1} is even. This realises the isomorphism
 * from the F_2-vector space of labels onto {-1,+1}^l: symmetric
 * difference of labels goes to the pointwise product of vectors.
 */
SignVector omega_lambda(const DadeLabel& label);

/**
 * @brief The unique label with omega_lambda(label) = v.
 *
 * The sign vector does not determine p, so the shape prime is passed
 * separately (defaulted for p-independent uses such as the exhaustive
 * bijection checks).
 */
DadeLabel invert_omega(const SignVector& v, std::uint64_t p = 3);

/**
 * @brief The interval label [a, b], i.e. A = {a, a+1, ..., b}.
 *
 * a > b yields the empty label for any l (the empty-interval
 * convention); otherwise both endpoints must lie below l
 * (out-of-range error). The shape prime is passed separately, as for
 * invert_omega.
 */
DadeLabel interval_label(unsigned a, unsigned b, unsigned l,
                         std::uint64_t p = 3);

/**
 * @brief Entry i of omega_lambda(interval_label(a, b, l)), in closed
 * form: +1 for i <= a, (-1)^{i-a} for a < i <= b, and (-1)^{b-a+1}
 * for i > b.
 *
 * Requires a <= b (non-empty interval), b < l and 1 <= i <= l.
 */
int omega_of_interval_closed_form(unsigned a, unsigned b, unsigned l,
                                  unsigned i);

/**
 * @brief Group addition: symmetric difference of the index sets.
 *
 * Both labels must share one shape (incompatible-shapes error). The
 * empty label is neutral and every label is its own inverse.
 */
DadeLabel add_labels(const DadeLabel& x, const DadeLabel& y);

/** @brief Adds the full syzygy Omega = Omega_{D/D_0}: toggles index 0. */
DadeLabel omega_operator(const DadeLabel& x);

/**
 * @brief Label of the dominated block over the central quotient of
 * order p^{l-a}.
 *
 * Requires 1 <= a < l (out-of-range) and A disjoint from
 * {0, ..., a-1} (invalid-domination). Index a itself is dropped and
 * the remaining indices shift down by a.
 */
DadeLabel deflate_label(const DadeLabel& x, unsigned a);

/**
 * @brief Partial inverse of deflate_label.
 *
 * Given a label over length l-a, produces one over length l: indices
 * j >= 1 shift up by a, and index a is included exactly when the
 * quotient label's index-0 bit differs from bottom_flag. The bottom
 * flag absorbs the genuine two-fold ambiguity of lifting through a
 * central quotient (the lift is determined only up to one syzygy).
 */
DadeLabel inflate_label(const DadeLabel& xbar, unsigned a, int bottom_flag);

/**
 * @brief Human-readable module expression, e.g. "k", "Omega" chains.
 *
 * Empty label renders as "k"; otherwise the composition
 * "Ω_{D/D_j} ∘ ..." over ascending j applied to k.
 */
std::string render_label(const DadeLabel& x);

/** @brief JSON text {"p": ..., "l": ..., "A": [...]} (A ascending). */
std::string label_to_json_string(const DadeLabel& x);

/** @brief Parses the JSON produced by label_to_json_string. */
DadeLabel label_from_json_string(const std::string& text);

}  // namespace wb
