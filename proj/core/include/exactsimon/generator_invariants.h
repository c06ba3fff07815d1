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

#ifndef EXACTSIMON_GENERATOR_INVARIANTS_H
#define EXACTSIMON_GENERATOR_INVARIANTS_H

#include <string>
#include <vector>

#include "exactsimon/query_set.h"

namespace exactsimon {

struct InvariantCheck {
    std::string name;  ///< e.g. "max-msb", "strict-significance", "cross-cover-msb".
    int round = 0;     ///< k the check was evaluated at.
    bool passed = false;
    std::string detail;  ///< Empty on success; first counterexample otherwise.
};

struct InvariantReport {
    std::vector<InvariantCheck> checks;

    bool ok() const noexcept;
    std::size_t failures() const noexcept;
    /// The failing checks, one per line.
    std::string summary() const;
};

/// Audits a generator trace (a query set whose elements carry their round)
/// against every loop invariant of its generator, at every round.
///
/// Preliminary generator, for each Y^(k):
///   max-msb             max msb(y) over Y^(k) equals k+1
///   round-msb           msb(z) = k+1 for z in Z^(k), k >= 1
///   round-recurrence    Z^(k) = {2^k ^ y : y in Y^(k-2)}, k >= 2
///   strict-significance S(Y^(k)) = 0^{n-k-1}{0,1}^{k+1}
///   cross-cover-msb     {a ^ b : msb(a) = k+1, msb(b) < k+1} covers every
///                       string with msb exactly k+1
///
/// Final generator, for each Y^(k):
///   max-msb             equals k+2
///   round-msb           msb(z) = k+2 for z in Z^(k), k >= 1
///   round-recurrence    Z^(k) = {2^{k+1} ^ z, 2^{k+1} ^ 2^{k-1} ^ z :
///                       z in Z^(k-2)}, k >= 3
///   second-bit-clear    y_{j-1} = 0 whenever msb(y) = j >= 2
///   strict-significance S(Y^(k)) = 0^{n-k-2}{0,1}^{k+2}
///   cross-cover-msb     as above at level k+2
///   top-pair-cover      {d ^ e : msb(d) = k+2, msb(e) = k+1} covers every
///                       string whose top two bits are x_{k+2} x_{k+1} = 11
///
/// Structural checks (distinct elements, the exact initial set, round-major
/// order, round count) run first. Violations are reported, never thrown.
InvariantReport check_generator_invariants(const QuerySet& trace);

}  // namespace exactsimon

#endif  // EXACTSIMON_GENERATOR_INVARIANTS_H
