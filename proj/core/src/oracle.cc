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

#include "exactsimon/oracle.h"

#include <algorithm>
#include <random>
#include <utility>

namespace exactsimon {

namespace {

void check_widths(int n, int m) {
    if (n < 1 || n > kMaxWidth) {
        throw std::invalid_argument("oracle input width must be in [1, " + std::to_string(kMaxWidth) + "]");
    }
    if (m < n) {
        throw std::invalid_argument("oracle output width m=" + std::to_string(m) + " is below n=" + std::to_string(n));
    }
    if (m > kMaxWidth) {
        throw std::invalid_argument("oracle output width must be at most " + std::to_string(kMaxWidth));
    }
}

}  // namespace

std::string_view to_string(LabelingMode mode) {
    switch (mode) {
        case LabelingMode::kCanonical:
            return "canonical";
        case LabelingMode::kSeeded:
            return "seeded";
        case LabelingMode::kTable:
            return "table";
    }
    return "unknown";
}

LabelingMode parse_labeling_mode(std::string_view text) {
    if (text == "canonical") {
        return LabelingMode::kCanonical;
    }
    if (text == "seeded") {
        return LabelingMode::kSeeded;
    }
    if (text == "table") {
        return LabelingMode::kTable;
    }
    throw std::invalid_argument("unknown labeling mode '" + std::string(text) + "'");
}

WordScrambler::WordScrambler(std::uint64_t seed, int width) : width_(width), mask_(low_mask(width)) {
    std::mt19937_64 rng(seed);
    for (int r = 0; r < kRounds; r++) {
        mul_[r] = (rng() | 1) & mask_;
        add_[r] = rng() & mask_;
        shift_[r] = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, width_ - 1)));
    }
}

Word WordScrambler::operator()(Word x) const noexcept {
    for (int r = 0; r < kRounds; r++) {
        x = (x * mul_[r] + add_[r]) & mask_;
        if (shift_[r] < width_) {
            x ^= x >> shift_[r];
        }
    }
    return x;
}

SimonOracle SimonOracle::make_simon(int n, int m, const BitString& s, LabelingMode mode, std::uint64_t seed) {
    check_widths(n, m);
    if (s.width() != n) {
        throw std::invalid_argument("hidden period width does not match n");
    }
    if (s.is_zero()) {
        throw std::invalid_argument("hidden period must be nonzero; use make_injective for one-to-one oracles");
    }
    if (mode == LabelingMode::kTable) {
        throw std::invalid_argument("table labeling requires from_table");
    }
    SimonOracle o;
    o.spec_ = OracleSpec{n, m, s.word(), mode, mode == LabelingMode::kSeeded ? seed : 0};
    if (mode == LabelingMode::kSeeded) {
        o.scrambler_.emplace(seed, m);
    }
    return o;
}

SimonOracle SimonOracle::make_injective(int n, int m, std::optional<std::uint64_t> seed) {
    check_widths(n, m);
    SimonOracle o;
    o.spec_ = OracleSpec{n, m, 0, seed ? LabelingMode::kSeeded : LabelingMode::kCanonical, seed.value_or(0)};
    if (seed) {
        o.scrambler_.emplace(*seed, n);
    }
    return o;
}

SimonOracle SimonOracle::from_table(int n, int m, std::vector<Word> values) {
    check_widths(n, m);
    if (values.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("oracle table must have exactly 2^n entries");
    }
    for (Word v : values) {
        if (v > low_mask(m)) {
            throw std::invalid_argument("oracle table value does not fit in m bits");
        }
    }
    SimonOracle o;
    o.spec_ = OracleSpec{n, m, 0, LabelingMode::kTable, 0};
    o.table_ = std::move(values);
    return o;
}

SimonOracle SimonOracle::from_spec(const OracleSpec& spec) {
    if (spec.mode == LabelingMode::kTable) {
        throw std::invalid_argument("table oracles cannot be rebuilt from a spec");
    }
    if (spec.s == 0) {
        return make_injective(spec.n, spec.m,
                              spec.mode == LabelingMode::kSeeded ? std::optional<std::uint64_t>(spec.seed)
                                                                 : std::nullopt);
    }
    return make_simon(spec.n, spec.m, BitString(spec.s, spec.n), spec.mode, spec.seed);
}

Word SimonOracle::peek(Word x) const {
    if (!table_.empty()) {
        return table_[x];
    }
    Word label = spec_.s == 0 ? x : std::min(x, x ^ spec_.s);
    return scrambler_ ? (*scrambler_)(label) : label;
}

Word SimonOracle::classical_query(const BitString& x) {
    if (x.width() != spec_.n) {
        throw std::invalid_argument("classical query width does not match the oracle");
    }
    classical_queries_++;
    return peek(x.word());
}

void apply_quantum_oracle(QuantumState& state, SimonOracle& oracle, bool /*inverse*/) {
    if (state.n() != oracle.n() || state.m() != oracle.m()) {
        throw std::invalid_argument("state register widths do not match the oracle");
    }
    const Word rows = Word{1} << state.n();
    const Word cols = Word{1} << state.m();
    for (Word x = 0; x < rows; x++) {
        const Word fx = oracle.peek(x);
        if (fx == 0) {
            continue;
        }
        auto r = state.row(x);
        for (Word y = 0; y < cols; y++) {
            const Word partner = y ^ fx;
            if (y < partner) {
                std::swap(r[y], r[partner]);
            }
        }
    }
    oracle.quantum_queries_++;
}

}  // namespace exactsimon
