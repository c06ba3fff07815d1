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

#include "exactsimon/quantum_state.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace exactsimon {

QuantumState::QuantumState(int n, int m) : n_(n), m_(m) {
    if (n < 1 || m < 1 || n + m > 2 * kHardQuantumWidthCap) {
        throw std::invalid_argument(
            "register widths n=" + std::to_string(n) + ", m=" + std::to_string(m) +
            " exceed the dense simulation limit n + m <= " + std::to_string(2 * kHardQuantumWidthCap));
    }
    amps_.assign(std::size_t{1} << (n + m), Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

QuantumState QuantumState::basis(int n, int m, Word x, Word y) {
    QuantumState s(n, m);
    if (x > low_mask(n) || y > low_mask(m)) {
        throw std::invalid_argument("basis state index out of range");
    }
    s.amps_[0] = 0.0;
    s.at(x, y) = 1.0;
    return s;
}

double QuantumState::norm_squared() const noexcept {
    double total = 0;
    for (const Amplitude& a : amps_) {
        total += std::norm(a);
    }
    return total;
}

void hadamard_first(QuantumState& state) {
    const std::size_t rows = std::size_t{1} << state.n();
    const std::size_t width = state.row_size();
    Amplitude* data = state.amplitudes().data();
    for (std::size_t half = 1; half < rows; half <<= 1) {
        for (std::size_t base = 0; base < rows; base += 2 * half) {
            for (std::size_t x = base; x < base + half; x++) {
                Amplitude* lo = data + x * width;
                Amplitude* hi = data + (x + half) * width;
                for (std::size_t y = 0; y < width; y++) {
                    Amplitude a = lo[y];
                    Amplitude b = hi[y];
                    lo[y] = a + b;
                    hi[y] = a - b;
                }
            }
        }
    }
    const double scale = std::pow(2.0, -0.5 * state.n());
    for (Amplitude& a : state.amplitudes()) {
        a *= scale;
    }
}

void s0_phase(QuantumState& state, double phi) {
    state.amplitudes()[0] *= std::polar(1.0, phi);
}

void sa_phase(QuantumState& state, double varphi, const Gf2Span& span) {
    if (span.width() != state.n()) {
        throw std::invalid_argument("S_A phase span width does not match the first register");
    }
    const Amplitude factor = std::polar(1.0, varphi);
    const Word rows = Word{1} << state.n();
    for (Word x = 0; x < rows; x++) {
        if (span.contains_word(x)) {
            continue;
        }
        for (Amplitude& a : state.row(x)) {
            a *= factor;
        }
    }
}

std::vector<double> first_register_distribution(const QuantumState& state) {
    const Word rows = Word{1} << state.n();
    std::vector<double> out(rows, 0.0);
    for (Word x = 0; x < rows; x++) {
        double p = 0;
        for (const Amplitude& a : state.row(x)) {
            p += std::norm(a);
        }
        out[x] = p;
    }
    return out;
}

double span_mass(const QuantumState& state, const Gf2Span& span) {
    if (span.width() != state.n()) {
        throw std::invalid_argument("span width does not match the first register");
    }
    const Word rows = Word{1} << state.n();
    double total = 0;
    for (Word x = 0; x < rows; x++) {
        if (!span.contains_word(x)) {
            continue;
        }
        for (const Amplitude& a : state.row(x)) {
            total += std::norm(a);
        }
    }
    return total;
}

double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

BitString measure_first_register(QuantumState& state, Rng& rng) {
    std::vector<double> dist = first_register_distribution(state);
    double total = 0;
    for (double p : dist) {
        total += p;
    }
    if (!(total > 0)) {
        throw std::domain_error("cannot measure a zero state");
    }
    const double target = uniform_unit(rng) * total;
    // Roundoff in the running sum can leave target >= acc at the end; the
    // last outcome with support is taken then.
    Word outcome = 0;
    double acc = 0;
    for (Word x = 0; x < dist.size(); x++) {
        if (dist[x] <= 0) {
            continue;
        }
        outcome = x;
        acc += dist[x];
        if (target < acc) {
            break;
        }
    }

    const double scale = 1.0 / std::sqrt(dist[outcome]);
    for (Word x = 0; x < dist.size(); x++) {
        auto r = state.row(x);
        if (x == outcome) {
            for (Amplitude& a : r) {
                a *= scale;
            }
        } else {
            for (Amplitude& a : r) {
                a = 0.0;
            }
        }
    }
    return BitString(outcome, state.n());
}

BitString measure_first_register(QuantumState& state, std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    return measure_first_register(state, rng);
}

}  // namespace exactsimon
