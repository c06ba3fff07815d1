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

#ifndef EXACTSIMON_CLASSICAL_SOLVER_H
#define EXACTSIMON_CLASSICAL_SOLVER_H

#include <cstdint>
#include <optional>

#include "exactsimon/bitstring.h"
#include "exactsimon/oracle.h"
#include "exactsimon/query_set.h"

namespace exactsimon {

struct SolveOptions {
    /// Recompute the covering set and refuse (std::invalid_argument) unless
    /// the query set is n-significant.
    bool check_significance = false;
    /// Keep querying the whole set after the first collision and raise
    /// PromiseViolation on a three-way collision or on two collisions that
    /// imply different periods.
    bool audit_promise = false;
};

struct ClassicalOutcome {
    std::optional<BitString> period;  ///< Empty means the one-to-one verdict.
    std::uint64_t queries = 0;

    bool one_to_one() const noexcept { return !period.has_value(); }
};

/// Deterministic solver: query Y in order until two distinct strings
/// collide and return their XOR. Without a collision the function is
/// one-to-one, since an n-significant Y pairs up every candidate period.
ClassicalOutcome solve_classical(SimonOracle& oracle, const QuerySet& ys, const SolveOptions& options = {});

}  // namespace exactsimon

#endif  // EXACTSIMON_CLASSICAL_SOLVER_H
