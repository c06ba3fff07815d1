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

#ifndef EXACTSIMON_SIMON_H
#define EXACTSIMON_SIMON_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exactsimon/bitstring.h"
#include "exactsimon/oracle.h"

namespace exactsimon {

/// Probability mass treated as zero: the square of a ~1e-9 amplitude.
inline constexpr double kZeroMassTolerance = 1e-18;

struct BoundedSimonResult {
    BitString period;
    int iterations = 0;
    std::uint64_t quantum_queries = 0;
    std::vector<BitString> measurements;
};

/// The bounded-error loop ran out of iterations before <Y> reached rank n-1.
class IterationBudgetExhausted : public std::runtime_error {
   public:
    IterationBudgetExhausted(const std::string& what, BoundedSimonResult partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}
    const BoundedSimonResult& partial() const noexcept { return partial_; }

   private:
    BoundedSimonResult partial_;
};

/// Simon's original loop: prepare |0,0>, apply A, measure the first
/// register, keep z when it is independent of what was seen, stop at
/// rank n-1 and return the nonzero element of <Y>^perp. One quantum query
/// per iteration. Throws IterationBudgetExhausted after max_iterations.
BoundedSimonResult simon_bounded(SimonOracle& oracle, std::uint64_t rng_seed, int max_iterations);

struct ExactSimonResult {
    BitString period;
    std::uint64_t query_count = 0;
    double max_bad_mass = 0;
    std::vector<double> bad_mass;  ///< Mass on <Y> after Q, per iteration.
    std::vector<BitString> measurements;
};

/// Raised when the post-Q state keeps weight on <Y> above tolerance, or a
/// measurement lands in <Y>. Only a promise breach or a numerical fault can
/// cause either.
class ExactnessViolation : public std::runtime_error {
   public:
    ExactnessViolation(const std::string& what, int iteration, double bad_mass)
        : std::runtime_error(what), iteration_(iteration), bad_mass_(bad_mass) {}
    int iteration() const noexcept { return iteration_; }
    double bad_mass() const noexcept { return bad_mass_; }

   private:
    int iteration_;
    double bad_mass_;
};

/// Exact variant: n-1 rounds of A then one amplification step Q whose
/// phases zero the amplitude on <Y>, so every measurement is a new
/// independent element of K^perp. Uses exactly 3(n-1) quantum queries.
///
/// The bad-subspace mass is checked before each measurement; the outcome
/// is then drawn from the marginal restricted to the good subspace.
/// Requires 2 <= n <= kHardQuantumWidthCap.
ExactSimonResult exact_simon(SimonOracle& oracle, std::uint64_t rng_seed = 0);

}  // namespace exactsimon

#endif  // EXACTSIMON_SIMON_H
