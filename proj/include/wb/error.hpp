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

#include <stdexcept>
#include <string>

namespace wb {

/**
 * @brief Classifies every refusal the library can issue.
 *
 * Each enumerator corresponds to one contract violation. The textual
 * names (see kind_name) appear verbatim in error messages and in CLI
 * diagnostics, so callers can match on either the enum or the slug.
 */
enum class ErrorKind {
    UndefinedValuation,   // p-adic valuation of zero requested
    NotAUnit,             // multiplicative order of a non-unit residue
    OutOfRange,           // argument outside the supported domain
    NonInvertibleRoot,    // polynomial involution needs nonzero constant term
    InconsistentField,    // coefficient field does not match the stated form
    HypothesisViolation,  // a stated arithmetic hypothesis fails
    Degenerate,           // degenerate geometric configuration
    IncompatibleShapes,   // operands live over different cyclic group shapes
    InvalidDomination,    // label support forbids the requested quotient
    InvalidExponent,      // power-sequence exponent outside its band
    InvalidSupport,       // eigenvalue support incompatible with the order d
    InvalidScenario,      // scenario parameters are mutually inconsistent
    BadCharacteristic,    // p divides q where it must not
    InvalidDescriptor,    // group family/rank/field combination not admitted
    OutOfScope,           // recognised input whose theory is not covered here
    ReproductionFailure,  // a pinned worked example failed to reproduce
};

const char* kind_name(ErrorKind k) noexcept;

/**
 * @brief Exception type carrying an ErrorKind alongside the message.
 *
 * what() is always "<kind-slug>: <detail>".
 */
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + detail),
          kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace wb
