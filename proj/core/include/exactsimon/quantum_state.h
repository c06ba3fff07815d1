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

#ifndef EXACTSIMON_QUANTUM_STATE_H
#define EXACTSIMON_QUANTUM_STATE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "exactsimon/bitstring.h"
#include "exactsimon/gf2_span.h"

namespace exactsimon {

using Amplitude = std::complex<double>;
using Rng = std::mt19937_64;

/// Largest register width a dense simulation will allocate for. The CLI
/// defaults to a lower cap (see kDefaultQuantumWidthCap).
inline constexpr int kHardQuantumWidthCap = 12;
inline constexpr int kDefaultQuantumWidthCap = 10;

/// Dense state of two registers |x, y>, x in {0,1}^n and y in {0,1}^m.
/// The amplitude of |x, y> lives at index x * 2^m + y, so each x owns a
/// contiguous row of 2^m amplitudes.
class QuantumState {
   public:
    /// |0^n, 0^m>. Throws std::invalid_argument unless 1 <= n and
    /// 1 <= m and n + m <= 2 * kHardQuantumWidthCap.
    QuantumState(int n, int m);

    static QuantumState basis(int n, int m, Word x, Word y);

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    std::size_t size() const noexcept { return amps_.size(); }
    std::size_t row_size() const noexcept { return std::size_t{1} << m_; }

    std::span<Amplitude> amplitudes() noexcept { return amps_; }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }

    std::span<Amplitude> row(Word x) noexcept { return {amps_.data() + x * row_size(), row_size()}; }
    std::span<const Amplitude> row(Word x) const noexcept { return {amps_.data() + x * row_size(), row_size()}; }

    Amplitude& at(Word x, Word y) { return amps_.at(x * row_size() + y); }
    const Amplitude& at(Word x, Word y) const { return amps_.at(x * row_size() + y); }

    double norm_squared() const noexcept;

   private:
    int n_;
    int m_;
    std::vector<Amplitude> amps_;
};

/// H^{(x)n} on the first register, second register untouched. Implemented
/// as an in-place fast Walsh-Hadamard transform over whole rows.
void hadamard_first(QuantumState& state);

/// S_0(phi): multiplies the |0^n, 0^m> amplitude by e^{i phi}.
void s0_phase(QuantumState& state, double phi);

/// S_A(varphi, Y) (x) I: multiplies every |x, y> with x outside <Y> by
/// e^{i varphi}.
void sa_phase(QuantumState& state, double varphi, const Gf2Span& span);

/// Exact marginal of the first register, indexed by x. No collapse.
std::vector<double> first_register_distribution(const QuantumState& state);

/// Sum of |amp(x, y)|^2 over x in <Y> and all y.
double span_mass(const QuantumState& state, const Gf2Span& span);

/// Draws x from the first-register marginal, zeroes every other row and
/// renormalizes. Returns the outcome.
BitString measure_first_register(QuantumState& state, Rng& rng);
BitString measure_first_register(QuantumState& state, std::uint64_t rng_seed);

/// Uniform double in [0, 1) built from the top 53 bits of one draw, so a
/// given seed yields the same stream on every standard library.
double uniform_unit(Rng& rng);

}  // namespace exactsimon

#endif  // EXACTSIMON_QUANTUM_STATE_H
