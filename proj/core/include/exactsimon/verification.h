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

#ifndef EXACTSIMON_VERIFICATION_H
#define EXACTSIMON_VERIFICATION_H

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "exactsimon/amplification.h"

namespace exactsimon {

/// Outcome of one end-to-end verification check.
struct CheckResult {
    int id = 0;
    std::string name;
    std::string anchor;  ///< The result being checked, e.g. "exact algorithm theorem".
    bool passed = false;
    bool gating = true;  ///< Statistical soft checks are reported but do not gate.
    std::string detail;
    double seconds = 0;
};

using PhaseFunction = std::function<PhasePair(int n, int l)>;

/// Ranges and budgets for the verification suite. Defaults are the full
/// acceptance ranges.
struct VerificationOptions {
    int quantum_max_n = 8;            ///< Exact-algorithm and distribution sweeps cover 2..this.
    int seeded_labelings = 10;        ///< Extra scrambled-label oracles per n.
    int lemma_min_n = 3;
    int lemma_max_n = 6;
    int lemma_periods = 4;            ///< Random periods per n in the operator-identity check.
    int phase_max_n = 30;
    int size_max_n = 24;
    int generator_max_n = 16;         ///< Significance and loop-invariant audits cover 3..this.
    int solver_exhaustive_max_n = 8;
    int solver_seeded_max_n = 12;
    int solver_seeded_trials = 100;
    int bounded_n = 6;
    int bounded_trials = 100;
    std::uint64_t seed = 20260101;

    double exact_budget_seconds = 120;
    double size_budget_seconds = 10;
    double significance_budget_seconds = 60;

    /// Phase formula under test. Replaced only by mutation tests.
    PhaseFunction phase_fn = phases;
};

/// Runs every check in order, calling `on_result` as each finishes.
std::vector<CheckResult> run_verification(const VerificationOptions& options,
                                          const std::function<void(const CheckResult&)>& on_result = {});

/// True iff every gating check passed.
bool all_gating_passed(const std::vector<CheckResult>& results);

}  // namespace exactsimon

#endif  // EXACTSIMON_VERIFICATION_H
