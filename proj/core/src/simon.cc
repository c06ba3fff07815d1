// Copyright 2026 The exactsimon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "exactsimon/simon.h"

#include <algorithm>
#include <string>

#include "exactsimon/amplification.h"
#include "exactsimon/gf2_span.h"

namespace exactsimon {

namespace {

void check_quantum_width(const SimonOracle& oracle, int min_n) {
    if (oracle.n() < min_n || oracle.n() > kHardQuantumWidthCap) {
        throw std::invalid_argument(
            "quantum simulation needs " + std::to_string(min_n) + " <= n <= " +
            std::to_string(kHardQuantumWidthCap) + ", got n=" + std::to_string(oracle.n()));
    }
}

}  // namespace

BoundedSimonResult simon_bounded(SimonOracle& oracle, std::uint64_t rng_seed, int max_iterations) {
    check_quantum_width(oracle, 1);
    const int n = oracle.n();
    const std::uint64_t start = oracle.quantum_queries();
    Rng rng(rng_seed);
    Gf2Span span(n);
    BoundedSimonResult result;
    while (span.rank() < n - 1) {
        if (result.iterations >= max_iterations) {
            result.quantum_queries = oracle.quantum_queries() - start;
            throw IterationBudgetExhausted(
                "no basis of K^perp after " + std::to_string(max_iterations) + " iterations (rank " +
                    std::to_string(span.rank()) + " of " + std::to_string(n - 1) + ")",
                std::move(result));
        }
        QuantumState state(n, oracle.m());
        apply_A(state, oracle);
        BitString z = measure_first_register(state, rng);
        result.iterations++;
        result.measurements.push_back(z);
        span.insert(z);
    }
    result.period = span.pick_nonzero_perp();
    result.quantum_queries = oracle.quantum_queries() - start;
    return result;
}

ExactSimonResult exact_simon(SimonOracle& oracle, std::uint64_t rng_seed) {
    check_quantum_width(oracle, 2);
    const int n = oracle.n();
    const std::uint64_t start = oracle.quantum_queries();
    Rng rng(rng_seed);
    Gf2Span span(n);
    ExactSimonResult result;
    for (int iteration = 0; iteration < n - 1; iteration++) {
        QuantumState state(n, oracle.m());
        apply_A(state, oracle);
        const PhasePair pair = phases(n, span.rank() + 1);
        apply_Q(state, oracle, pair, span);

        const double bad = span_mass(state, span);
        result.bad_mass.push_back(bad);
        result.max_bad_mass = std::max(result.max_bad_mass, bad);
        if (!(bad < kZeroMassTolerance)) {
            throw ExactnessViolation("post-amplification mass " + std::to_string(bad) + " remains on <Y> at iteration " +
                                         std::to_string(iteration + 1),
                                     iteration + 1, bad);
        }
        // Drop the (numerically zero) bad rows so sampling only sees K^perp \ <Y>.
        for (Word x = 0; x < (Word{1} << n); x++) {
            if (span.contains_word(x)) {
                for (Amplitude& a : state.row(x)) {
                    a = 0.0;
                }
            }
        }
        const BitString z = measure_first_register(state, rng);
        if (!span.insert(z)) {
            throw ExactnessViolation("measured " + z.to_string() + " which already lies in <Y>", iteration + 1, bad);
        }
        result.measurements.push_back(z);
    }
    result.period = span.pick_nonzero_perp();
    result.query_count = oracle.quantum_queries() - start;
    return result;
}

}  // namespace exactsimon
