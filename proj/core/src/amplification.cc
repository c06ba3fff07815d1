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

#include "exactsimon/amplification.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace exactsimon {

PhasePair phases(int n, int l) {
    if (l < 1 || l > n - 1) {
        throw std::domain_error(
            "phase angles need 1 <= l <= n - 1, got n=" + std::to_string(n) + ", l=" + std::to_string(l));
    }
    // t = 2^{n-l} >= 2, so 3t - 4 > 0 and the acos argument lies in [0, 1/2].
    const double t = std::ldexp(1.0, n - l);
    PhasePair pair;
    pair.phi = 2.0 * std::atan(std::sqrt(t / (3.0 * t - 4.0)));
    pair.varphi = std::acos((t / 2.0 - 1.0) / (t - 1.0));
    pair.n = n;
    pair.l = l;
    return pair;
}

double phase_condition_residual(const PhasePair& pair) {
    const std::complex<double> e_phi = std::polar(1.0, pair.phi);
    const std::complex<double> e_varphi = std::polar(1.0, pair.varphi);
    const double good = 1.0 - std::ldexp(1.0, pair.l - pair.n);
    return std::abs(e_varphi * (1.0 - e_phi) * good - (1.0 - e_phi) * good - e_phi);
}

void apply_A(QuantumState& state, SimonOracle& oracle) {
    hadamard_first(state);
    apply_quantum_oracle(state, oracle, false);
    hadamard_first(state);
}

void apply_A_dagger(QuantumState& state, SimonOracle& oracle) {
    hadamard_first(state);
    apply_quantum_oracle(state, oracle, true);
    hadamard_first(state);
}

void apply_Q(QuantumState& state, SimonOracle& oracle, const PhasePair& pair, const Gf2Span& span) {
    if (pair.n != state.n() || span.width() != state.n()) {
        throw std::invalid_argument("phase pair or span width does not match the state");
    }
    if (pair.l != span.rank() + 1) {
        throw std::invalid_argument(
            "phase pair computed for l=" + std::to_string(pair.l) + " but |Y|=" + std::to_string(span.rank() + 1));
    }
    sa_phase(state, pair.varphi, span);
    apply_A_dagger(state, oracle);
    s0_phase(state, pair.phi);
    apply_A(state, oracle);
    for (Amplitude& a : state.amplitudes()) {
        a = -a;
    }
}

}  // namespace exactsimon
