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

#ifndef EXACTSIMON_AMPLIFICATION_H
#define EXACTSIMON_AMPLIFICATION_H

#include "exactsimon/gf2_span.h"
#include "exactsimon/oracle.h"
#include "exactsimon/quantum_state.h"

namespace exactsimon {

/// Phase angles for one exact amplitude-amplification step.
///
/// `l` counts the tracked set Y including 0^n, so the bad subspace <Y> has
/// 2^{l-1} of the 2^{n-1} strings in K^perp and carries probability
/// 2^{l-n} before amplification.
struct PhasePair {
    double phi = 0;     ///< Angle of S_0.
    double varphi = 0;  ///< Angle of S_A.
    int n = 0;
    int l = 0;
};

/// Closed-form angles that make one Q step cancel the bad subspace:
///   phi    = 2 atan(sqrt(2^{n-l} / (3 * 2^{n-l} - 4)))
///   varphi = acos((2^{n-l-1} - 1) / (2^{n-l} - 1))
/// Throws std::domain_error unless 1 <= l <= n - 1.
PhasePair phases(int n, int l);

/// |e^{i varphi}(1 - e^{i phi})(1 - p) - (1 - e^{i phi})(1 - p) - e^{i phi}|
/// with p = 2^{l-n}. Zero exactly when the pair cancels the bad component.
double phase_condition_residual(const PhasePair& pair);

/// A = (H (x) I) O_f (H (x) I). One quantum query.
void apply_A(QuantumState& state, SimonOracle& oracle);

/// A^dagger. Every factor of A is self-inverse, so this applies the same
/// three factors in reverse order with the oracle marked inverse.
void apply_A_dagger(QuantumState& state, SimonOracle& oracle);

/// Q = -A S_0(phi) A^dagger (S_A(varphi, Y) (x) I), factors applied right
/// to left, then the global -1. Two quantum queries.
///
/// Throws std::invalid_argument if the pair was computed for a different
/// n or for l != span.rank() + 1.
void apply_Q(QuantumState& state, SimonOracle& oracle, const PhasePair& pair, const Gf2Span& span);

}  // namespace exactsimon

#endif  // EXACTSIMON_AMPLIFICATION_H
