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

#ifndef EXACTSIMON_COVERING_SET_H
#define EXACTSIMON_COVERING_SET_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "exactsimon/bitstring.h"
#include "exactsimon/query_set.h"

namespace exactsimon {

/// Widest covering set we materialize (a 2^n-bit membership table).
inline constexpr int kMaxCoveringWidth = 26;

/// Membership table over {0,1}^n.
class WordSet {
   public:
    explicit WordSet(int n);

    int n() const noexcept { return n_; }
    bool contains(Word w) const noexcept { return (bits_[w >> 6] >> (w & 63)) & 1; }
    void insert(Word w) noexcept;
    std::size_t size() const noexcept { return count_; }

    /// True iff every word in [lo, hi) is present.
    bool contains_range(Word lo, Word hi) const noexcept;

    std::vector<Word> members() const;

   private:
    int n_;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// S = {a ^ b : a, b in Y}, including a == b so 0^n is a member whenever Y
/// is nonempty. Built by direct pair enumeration.
using CoveringSet = WordSet;

CoveringSet covering_set(int n, std::span<const Word> ys);
CoveringSet covering_set(const QuerySet& ys);

/// {a ^ b : a in lhs, b in rhs}.
WordSet cross_xor(int n, std::span<const Word> lhs, std::span<const Word> rhs);

/// 0^{n-m}{0,1}^m is contained in S(Y).
bool is_significance(const CoveringSet& s, int m);
bool is_significance(const QuerySet& ys, int m);

/// S(Y) equals 0^{n-m}{0,1}^m.
bool is_strict_significance(const CoveringSet& s, int m);
bool is_strict_significance(const QuerySet& ys, int m);

}  // namespace exactsimon

#endif  // EXACTSIMON_COVERING_SET_H
