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

// Internal driver shared by the verifier translation units.  Every sweep
// is cut into independent chunks; the serial driver runs them in order,
// the OpenMP driver distributes them over threads.  Reports are merged in
// chunk order in both cases, so the output is identical either way.

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <vector>

#include "wb/numth.hpp"
#include "wb/report.hpp"

namespace wb::detail {

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}

    double seconds() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(now - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

// Serial reference driver, kept as its own code path for testing.
template <typename Worker>
void run_chunks_serial(std::size_t chunks, Worker&& work) {
    for (std::size_t i = 0; i < chunks; ++i) work(i);
}

// Exceptions cannot leave an OpenMP region, so the first one is parked
// and rethrown after the loop.
template <typename Worker>
void run_chunks_openmp(std::size_t chunks, Worker&& work) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(chunks); ++i) {
        try {
            work(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(wb_chunk_failure)
            {
                if (!failure) failure = std::current_exception();
            }
        }
    }
    if (failure) std::rethrow_exception(failure);
}

template <typename Worker>
void run_chunks(std::size_t chunks, bool parallel, Worker&& work) {
    if (parallel) {
        run_chunks_openmp(chunks, work);
    } else {
        run_chunks_serial(chunks, work);
    }
}

// Merges per-chunk reports into `total` in chunk order; sample capacity
// is capped as in record_violation.
inline void merge_parts(VerifyReport& total,
                        const std::vector<VerifyReport>& parts) {
    for (const VerifyReport& part : parts) {
        total.cases += part.cases;
        total.violations += part.violations;
        for (const std::string& s : part.samples) {
            if (total.samples.size() < VerifyReport::kMaxSamples) {
                total.samples.push_back(s);
            }
        }
    }
}

// Runs a chunked sweep end to end and stamps suite name and timing.
template <typename Worker>
VerifyReport chunked_sweep(const char* suite, std::size_t chunks,
                           bool parallel, Worker&& per_chunk) {
    Stopwatch sw;
    std::vector<VerifyReport> parts(chunks);
    run_chunks(chunks, parallel, [&](std::size_t i) { per_chunk(i, parts[i]); });
    VerifyReport total;
    total.suite = suite;
    merge_parts(total, parts);
    total.seconds = sw.seconds();
    return total;
}

inline std::vector<std::uint64_t> odd_primes_upto(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 3; p <= bound; p += 2) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

inline std::vector<std::uint64_t> prime_powers_upto(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= bound; ++q) {
        if (is_prime_power(q)) out.push_back(q);
    }
    return out;
}

// Runs fn and reports whether it raised exactly the expected error kind.
template <typename Fn>
bool raises(Fn&& fn, ErrorKind want) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind() == want;
    } catch (...) {
        return false;
    }
    return false;
}

}  // namespace wb::detail
