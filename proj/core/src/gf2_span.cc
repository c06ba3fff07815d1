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

#include "exactsimon/gf2_span.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace exactsimon {

namespace {

Word pivot_bit(Word row) noexcept {
    return Word{1} << (msb(row) - 1);
}

}  // namespace

Gf2Span::Gf2Span(int width) : width_(width) {
    if (width < 1 || width > kMaxWidth) {
        throw std::invalid_argument("span width must be in [1, " + std::to_string(kMaxWidth) + "]");
    }
}

Word Gf2Span::reduce(Word x) const noexcept {
    // Pivots decrease down the list and are cleared everywhere else, so a
    // single top-down pass suffices.
    for (Word row : rows_) {
        if (x & pivot_bit(row)) {
            x ^= row;
        }
    }
    return x;
}

bool Gf2Span::contains_word(Word x) const noexcept {
    return reduce(x) == 0;
}

bool Gf2Span::contains(const BitString& x) const {
    if (x.width() != width_) {
        throw std::invalid_argument("span membership query with mismatched width");
    }
    return contains_word(x.word());
}

bool Gf2Span::insert(const BitString& z) {
    if (z.width() != width_) {
        throw std::invalid_argument("span insert with mismatched width");
    }
    Word r = reduce(z.word());
    if (r == 0) {
        return false;
    }
    Word p = pivot_bit(r);
    for (Word& row : rows_) {
        if (row & p) {
            row ^= r;
        }
    }
    auto pos = std::find_if(rows_.begin(), rows_.end(), [&](Word row) { return row < r; });
    rows_.insert(pos, r);
    return true;
}

Gf2Span Gf2Span::perp() const {
    Word pivots = 0;
    for (Word row : rows_) {
        pivots |= pivot_bit(row);
    }
    // For each free column j: e_j plus the pivot of every row that has bit j.
    Gf2Span out(width_);
    for (int j = 0; j < width_; j++) {
        Word col = Word{1} << j;
        if (pivots & col) {
            continue;
        }
        Word v = col;
        for (Word row : rows_) {
            if (row & col) {
                v |= pivot_bit(row);
            }
        }
        out.insert(BitString(v, width_));
    }
    return out;
}

BitString Gf2Span::pick_nonzero_perp() const {
    if (rank() == width_) {
        throw std::domain_error("span has full rank; its perp contains only the zero string");
    }
    Gf2Span p = perp();
    Word best = *std::min_element(p.rows_.begin(), p.rows_.end());
    return BitString(best, width_);
}

}  // namespace exactsimon
