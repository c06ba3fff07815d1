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

#include "exactsimon/covering_set.h"

#include <bit>
#include <stdexcept>
#include <string>

namespace exactsimon {

WordSet::WordSet(int n) : n_(n) {
    if (n < 1 || n > kMaxCoveringWidth) {
        throw std::invalid_argument("covering sets are limited to 1 <= n <= " + std::to_string(kMaxCoveringWidth));
    }
    bits_.assign(((std::size_t{1} << n) + 63) / 64, 0);
}

void WordSet::insert(Word w) noexcept {
    std::uint64_t& word = bits_[w >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (w & 63);
    if (!(word & bit)) {
        word |= bit;
        count_++;
    }
}

bool WordSet::contains_range(Word lo, Word hi) const noexcept {
    for (Word w = lo; w < hi; w++) {
        if (!contains(w)) {
            return false;
        }
    }
    return true;
}

std::vector<Word> WordSet::members() const {
    std::vector<Word> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < bits_.size(); i++) {
        std::uint64_t b = bits_[i];
        while (b) {
            out.push_back(i * 64 + static_cast<Word>(std::countr_zero(b)));
            b &= b - 1;
        }
    }
    return out;
}

CoveringSet covering_set(int n, std::span<const Word> ys) {
    CoveringSet s(n);
    for (std::size_t i = 0; i < ys.size(); i++) {
        for (std::size_t j = i; j < ys.size(); j++) {
            s.insert(ys[i] ^ ys[j]);
        }
    }
    return s;
}

CoveringSet covering_set(const QuerySet& ys) {
    std::vector<Word> v = ys.values();
    return covering_set(ys.n(), v);
}

WordSet cross_xor(int n, std::span<const Word> lhs, std::span<const Word> rhs) {
    WordSet s(n);
    for (Word a : lhs) {
        for (Word b : rhs) {
            s.insert(a ^ b);
        }
    }
    return s;
}

bool is_significance(const CoveringSet& s, int m) {
    if (m < 0 || m > s.n()) {
        throw std::invalid_argument("significance level must be in [0, n]");
    }
    return s.contains_range(0, Word{1} << m);
}

bool is_strict_significance(const CoveringSet& s, int m) {
    return is_significance(s, m) && s.size() == (std::size_t{1} << m);
}

bool is_significance(const QuerySet& ys, int m) {
    return is_significance(covering_set(ys), m);
}

bool is_strict_significance(const QuerySet& ys, int m) {
    return is_strict_significance(covering_set(ys), m);
}

}  // namespace exactsimon
