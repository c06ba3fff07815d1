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

#ifndef EXACTSIMON_GF2_SPAN_H
#define EXACTSIMON_GF2_SPAN_H

#include <span>
#include <vector>

#include "exactsimon/bitstring.h"

namespace exactsimon {

/// Incrementally maintained subgroup <Y> of ({0,1}^n, XOR).
///
/// Rows are kept in fully reduced row-echelon form: every row is nonzero,
/// pivots (the row's msb) strictly decrease down the list, and each pivot
/// bit is clear in every other row. Membership is then one elimination
/// pass over the rows, and an insert costs O(rank) word operations, so a
/// sequence of inserts reuses all earlier elimination work.
///
/// The zero string is never stored. Callers that track a set Y containing
/// 0^n use |Y| = rank() + 1.
class Gf2Span {
   public:
    explicit Gf2Span(int width);

    int width() const noexcept { return width_; }
    int rank() const noexcept { return static_cast<int>(rows_.size()); }
    std::span<const Word> rows() const noexcept { return rows_; }

    /// Adds z to the generators. Returns true iff z was outside the span
    /// (rank grew by one). Inserting 0^n or a member returns false.
    bool insert(const BitString& z);

    bool contains(const BitString& x) const;

    /// Unchecked membership on a raw word already known to fit the width.
    bool contains_word(Word x) const noexcept;

    /// Basis of <Y>^perp = {g : g . y = 0 for all y in Y}, of rank width - rank.
    Gf2Span perp() const;

    /// Canonical nonzero element of <Y>^perp: the smallest word among the
    /// perp basis rows. Throws std::domain_error when rank == width.
    BitString pick_nonzero_perp() const;

    /// Reduces x against the rows. Zero iff x is a member.
    Word reduce(Word x) const noexcept;

   private:
    int width_;
    std::vector<Word> rows_;
};

}  // namespace exactsimon

#endif  // EXACTSIMON_GF2_SPAN_H
