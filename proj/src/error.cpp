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

#include "wb/error.hpp"

namespace wb {

const char* kind_name(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::UndefinedValuation: return "undefined-valuation";
        case ErrorKind::NotAUnit: return "not-a-unit";
        case ErrorKind::OutOfRange: return "out-of-range";
        case ErrorKind::NonInvertibleRoot: return "non-invertible-root";
        case ErrorKind::InconsistentField: return "inconsistent-field";
        case ErrorKind::HypothesisViolation: return "hypothesis-violation";
        case ErrorKind::Degenerate: return "degenerate";
        case ErrorKind::IncompatibleShapes: return "incompatible-shapes";
        case ErrorKind::InvalidDomination: return "invalid-domination";
        case ErrorKind::InvalidExponent: return "invalid-exponent";
        case ErrorKind::InvalidSupport: return "invalid-support";
        case ErrorKind::InvalidScenario: return "invalid-scenario";
        case ErrorKind::BadCharacteristic: return "bad-characteristic";
        case ErrorKind::InvalidDescriptor: return "invalid-descriptor";
        case ErrorKind::OutOfScope: return "out-of-scope";
        case ErrorKind::ReproductionFailure: return "reproduction-failure";
    }
    return "unknown";
}

}  // namespace wb
