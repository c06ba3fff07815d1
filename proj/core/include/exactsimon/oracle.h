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

#ifndef EXACTSIMON_ORACLE_H
#define EXACTSIMON_ORACLE_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exactsimon/bitstring.h"
#include "exactsimon/quantum_state.h"

namespace exactsimon {

/// Raised when an oracle is observed to break the Simon promise.
class PromiseViolation : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class LabelingMode {
    kCanonical,  ///< f(x) = min(x, x ^ s), or f(x) = x for one-to-one oracles.
    kSeeded,     ///< Canonical labels pushed through a seeded bijection.
    kTable,      ///< Arbitrary caller-provided value table; no promise assumed.
};

std::string_view to_string(LabelingMode mode);
LabelingMode parse_labeling_mode(std::string_view text);

/// Seeded bijection on `width`-bit words built from invertible rounds
/// (odd multiply, add, xorshift), all modulo 2^width.
class WordScrambler {
   public:
    WordScrambler(std::uint64_t seed, int width);
    Word operator()(Word x) const noexcept;

   private:
    static constexpr int kRounds = 3;
    int width_;
    Word mask_;
    Word mul_[kRounds];
    Word add_[kRounds];
    int shift_[kRounds];
};

/// Reproducible description of an oracle: enough to rebuild it exactly.
struct OracleSpec {
    int n = 0;
    int m = 0;
    Word s = 0;  ///< 0 encodes the one-to-one variant.
    LabelingMode mode = LabelingMode::kCanonical;
    std::uint64_t seed = 0;  ///< Used only by kSeeded.

    friend bool operator==(const OracleSpec&, const OracleSpec&) = default;
};

/// A function f: {0,1}^n -> {0,1}^m with query accounting.
///
/// Classical queries and quantum applications (of O_f or its inverse) are
/// counted separately. Counters only grow. An instance is meant to be used
/// from one execution stream; the counters are not synchronized.
class SimonOracle {
   public:
    /// Promise oracle with hidden period s != 0^n. Throws
    /// std::invalid_argument if s is zero, m < n, or widths are out of range.
    static SimonOracle make_simon(int n, int m, const BitString& s, LabelingMode mode = LabelingMode::kCanonical,
                                  std::uint64_t seed = 0);

    /// One-to-one oracle. With no seed, f(x) = x; otherwise a seeded
    /// permutation of {0,1}^n embedded in m bits.
    static SimonOracle make_injective(int n, int m, std::optional<std::uint64_t> seed = std::nullopt);

    /// Oracle backed by an explicit table of 2^n values, each below 2^m.
    /// Used to exercise promise-violation paths.
    static SimonOracle from_table(int n, int m, std::vector<Word> values);

    static SimonOracle from_spec(const OracleSpec& spec);

    int n() const noexcept { return spec_.n; }
    int m() const noexcept { return spec_.m; }
    const OracleSpec& spec() const noexcept { return spec_; }
    LabelingMode mode() const noexcept { return spec_.mode; }

    /// Hidden period; 0^n for one-to-one (and table) oracles.
    BitString period() const { return BitString(spec_.s, spec_.n); }

    /// f(x) with classical_queries += 1.
    Word classical_query(const BitString& x);

    /// f(x) without touching the counters. For ground-truth checks in tests
    /// and verification code; algorithms must go through the counted paths.
    Word peek(Word x) const;

    std::uint64_t classical_queries() const noexcept { return classical_queries_; }
    std::uint64_t quantum_queries() const noexcept { return quantum_queries_; }

   private:
    friend void apply_quantum_oracle(QuantumState& state, SimonOracle& oracle, bool inverse);

    SimonOracle() = default;

    OracleSpec spec_;
    std::optional<WordScrambler> scrambler_;
    std::vector<Word> table_;
    std::uint64_t classical_queries_ = 0;
    std::uint64_t quantum_queries_ = 0;
};

/// O_f |x, y> = |x, y ^ f(x)>, or its inverse. Both are the same
/// permutation under XOR; each call counts as one quantum query. Throws
/// std::invalid_argument if the register widths do not match the oracle.
void apply_quantum_oracle(QuantumState& state, SimonOracle& oracle, bool inverse = false);

}  // namespace exactsimon

#endif  // EXACTSIMON_ORACLE_H
