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

#include "exactsimon/bitstring.h"

#include <stdexcept>

namespace exactsimon {

namespace {

void check_width(int width) {
    if (width < 1 || width > kMaxWidth) {
        throw std::invalid_argument(
            "bit string width must be in [1, " + std::to_string(kMaxWidth) + "], got " + std::to_string(width));
    }
}

}  // namespace

BitString::BitString(Word word, int width) : word_(word), width_(width) {
    check_width(width);
    if ((word & ~low_mask(width)) != 0) {
        throw std::invalid_argument(
            "word " + std::to_string(word) + " does not fit in " + std::to_string(width) + " bits");
    }
}

BitString BitString::zero(int width) {
    return BitString(0, width);
}

BitString BitString::power_of_two(int k, int width) {
    if (k < 0 || k >= width) {
        throw std::invalid_argument("2^" + std::to_string(k) + " is not an " + std::to_string(width) + "-bit string");
    }
    return BitString(Word{1} << k, width);
}

BitString BitString::parse(std::string_view literal) {
    if (literal.empty()) {
        throw std::invalid_argument("empty bit literal");
    }
    check_width(static_cast<int>(literal.size()));
    Word w = 0;
    for (char c : literal) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit literal may only contain '0' and '1': '" + std::string(literal) + "'");
        }
        w = (w << 1) | static_cast<Word>(c - '0');
    }
    return BitString(w, static_cast<int>(literal.size()));
}

bool BitString::bit(int index) const {
    if (index < 1 || index > width_) {
        throw std::out_of_range("bit index " + std::to_string(index) + " outside [1, " + std::to_string(width_) + "]");
    }
    return ((word_ >> (index - 1)) & 1) != 0;
}

std::string BitString::to_string() const {
    std::string out(static_cast<size_t>(width_), '0');
    for (int i = 0; i < width_; i++) {
        if ((word_ >> i) & 1) {
            out[static_cast<size_t>(width_ - 1 - i)] = '1';
        }
    }
    return out;
}

BitString BitString::operator^(const BitString& other) const {
    if (width_ != other.width_) {
        throw std::invalid_argument("XOR of bit strings with different widths");
    }
    BitString r;
    r.word_ = word_ ^ other.word_;
    r.width_ = width_;
    return r;
}

int inner_product(const BitString& a, const BitString& b) {
    if (a.width() != b.width()) {
        throw std::invalid_argument(
            "inner product of bit strings with widths " + std::to_string(a.width()) + " and " +
            std::to_string(b.width()));
    }
    return parity(a.word() & b.word());
}

int msb(const BitString& x) {
    return msb(x.word());
}

}  // namespace exactsimon
