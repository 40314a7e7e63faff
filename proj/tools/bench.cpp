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

// Compares the serial reference driver against the OpenMP driver on the
// heavy verification sweeps and confirms the merged reports agree.

#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wb/report.hpp"
#include "wb/verify.hpp"

int main() {
    struct Entry {
        const char* name;
        wb::VerifyReport (*fn)(bool);
    };
    const std::vector<Entry> entries = {
        {"numth/floor-parity", wb::verify_floor_parity_lemma},
        {"ffpoly/degree-families-brute", wb::verify_degree_families_brute},
        {"ffpoly/unitary-families-brute", wb::verify_unitary_families_brute},
        {"ffpoly/power-min-polys", wb::verify_power_min_polys},
        {"dade/sign-kernel", wb::verify_sign_kernel},
        {"pipeline/classical-reduction", wb::verify_classical_reduction},
    };

#ifdef _OPENMP
    std::cout << "OpenMP enabled, max threads: " << omp_get_max_threads()
              << "\n";
#else
    std::cout << "built without OpenMP; both columns run the serial driver\n";
#endif
    std::cout << std::left << std::setw(32) << "sweep" << std::right
              << std::setw(12) << "cases" << std::setw(12) << "serial"
              << std::setw(12) << "openmp" << std::setw(10) << "speedup"
              << std::setw(10) << "match" << "\n";

    bool all_match = true;
    for (const Entry& e : entries) {
        const wb::VerifyReport serial = e.fn(false);
        const wb::VerifyReport parallel = e.fn(true);
        const bool match = serial.cases == parallel.cases &&
                           serial.violations == parallel.violations &&
                           serial.samples == parallel.samples;
        all_match = all_match && match && serial.ok() && parallel.ok();
        std::cout << std::left << std::setw(32) << e.name << std::right
                  << std::setw(12) << serial.cases << std::setw(11)
                  << std::fixed << std::setprecision(2) << serial.seconds
                  << "s" << std::setw(11) << parallel.seconds << "s"
                  << std::setw(9) << std::setprecision(2)
                  << (parallel.seconds > 0.0
                          ? serial.seconds / parallel.seconds
                          : 0.0)
                  << "x" << std::setw(10) << (match ? "yes" : "NO") << "\n";
    }
    std::cout << (all_match ? "drivers agree on every sweep\n"
                            : "DRIVER MISMATCH\n");
    return all_match ? 0 : 1;
}
