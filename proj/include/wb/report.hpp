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

namespace wb {

/**
 * @brief Outcome of one verification sweep.
 *
 * A sweep enumerates a family of cases and checks each against an
 * independently computed expectation. Any mismatch increments
 * violations and (up to a cap) records a human-readable sample.
 */
struct VerifyReport {
    std::string suite;
    std::uint64_t cases = 0;
    std::uint64_t violations = 0;
    double seconds = 0.0;
    std::vector<std::string> samples;

    static constexpr std::size_t kMaxSamples = 8;

    bool ok() const { return violations == 0; }

    void record_violation(const std::string& sample) {
        ++violations;
        if (samples.size() < kMaxSamples)
            samples.push_back(sample);
    }
};

}  // namespace wb
