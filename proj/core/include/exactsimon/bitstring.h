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

#ifndef EXACTSIMON_BITSTRING_H
#define EXACTSIMON_BITSTRING_H

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace exactsimon {

using Word = std::uint64_t;

/// Widest string accepted anywhere in the library. Classical paths are
/// bounded by this; quantum paths impose their own, much smaller, cap.
inline constexpr int kMaxWidth = 30;

/// Highest 1-based set-bit index of a raw word, 0 for zero.
constexpr int msb(Word w) noexcept {
    return static_cast<int>(std::bit_width(w));
}

constexpr int parity(Word w) noexcept {
    return std::popcount(w) & 1;
}

/// An n-bit string x = x_n ... x_1 stored in the low n bits of a word.
///
/// Bit indices are 1-based from the least significant end, so the string
/// written "0010" (n = 4) has x_2 = 1 and word value 2. Values are plain
/// data; every mutating operation returns a new string.
class BitString {
   public:
    constexpr BitString() = default;

    /// Throws std::invalid_argument if width is outside [1, kMaxWidth] or
    /// word has bits set at or above position width.
    BitString(Word word, int width);

    static BitString zero(int width);

    /// The string 2^k, i.e. the single bit x_{k+1} set.
    static BitString power_of_two(int k, int width);

    /// Parses an x_n ... x_1 literal such as "10110". The width is the
    /// literal's length. Throws std::invalid_argument on any other character.
    static BitString parse(std::string_view literal);

    constexpr Word word() const noexcept { return word_; }
    constexpr int width() const noexcept { return width_; }
    constexpr bool is_zero() const noexcept { return word_ == 0; }

    /// x_index, 1-based. Throws std::out_of_range outside [1, width].
    bool bit(int index) const;

    /// Most significant bit first, always exactly width characters.
    std::string to_string() const;

    /// Word-wise XOR. Throws std::invalid_argument on a width mismatch.
    BitString operator^(const BitString& other) const;

    friend constexpr bool operator==(const BitString&, const BitString&) = default;
    friend constexpr std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
        if (auto c = a.width_ <=> b.width_; c != 0) {
            return c;
        }
        return a.word_ <=> b.word_;
    }

   private:
    Word word_ = 0;
    int width_ = 1;
};

/// GF(2) inner product: parity of popcount(a AND b).
/// Throws std::invalid_argument when the widths differ.
int inner_product(const BitString& a, const BitString& b);

/// 1-based index of the highest set bit; msb(0^n) = 0 and msb(2^k) = k + 1.
int msb(const BitString& x);

/// Word mask with the low `width` bits set.
constexpr Word low_mask(int width) noexcept {
    return width >= 64 ? ~Word{0} : (Word{1} << width) - 1;
}

}  // namespace exactsimon

#endif  // EXACTSIMON_BITSTRING_H
