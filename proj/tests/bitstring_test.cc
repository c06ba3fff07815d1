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

#include <gtest/gtest.h>

#include <random>

#include "testing/brute_force.h"

using namespace exactsimon;

TEST(BitString, parse_and_render_msb_first) {
    BitString b = BitString::parse("00110");
    ASSERT_EQ(b.width(), 5);
    ASSERT_EQ(b.word(), 6u);
    ASSERT_TRUE(b.bit(2));
    ASSERT_TRUE(b.bit(3));
    ASSERT_FALSE(b.bit(1));
    ASSERT_EQ(b.to_string(), "00110");
    ASSERT_EQ(BitString(1, 4).to_string(), "0001");
}

TEST(BitString, rejects_bad_input) {
    ASSERT_THROW(BitString(8, 3), std::invalid_argument);
    ASSERT_THROW(BitString(0, 0), std::invalid_argument);
    ASSERT_THROW(BitString(0, kMaxWidth + 1), std::invalid_argument);
    ASSERT_THROW(BitString::parse("10a"), std::invalid_argument);
    ASSERT_THROW(BitString::parse(""), std::invalid_argument);
    ASSERT_THROW(BitString(1, 3).bit(0), std::out_of_range);
    ASSERT_THROW(BitString(1, 3).bit(4), std::out_of_range);
    ASSERT_THROW(BitString(1, 3) ^ BitString(1, 4), std::invalid_argument);
}

TEST(BitString, inner_product_examples) {
    ASSERT_EQ(inner_product(BitString::parse("101"), BitString::parse("011")), 1);
    ASSERT_EQ(inner_product(BitString::parse("111"), BitString::parse("110")), 0);
    for (Word x = 0; x < 16; x++) {
        ASSERT_EQ(inner_product(BitString(x, 4), BitString::zero(4)), 0);
    }
    ASSERT_THROW(inner_product(BitString(1, 3), BitString(1, 4)), std::invalid_argument);
}

TEST(BitString, msb_examples) {
    ASSERT_EQ(msb(BitString::zero(7)), 0);
    for (int k = 0; k < 10; k++) {
        ASSERT_EQ(msb(BitString::power_of_two(k, 10)), k + 1);
    }
    ASSERT_EQ(msb(BitString::parse("00110")), 3);
}

TEST(BitString, inner_product_is_symmetric_and_bilinear) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; trial++) {
        const int n = 1 + static_cast<int>(rng() % kMaxWidth);
        const BitString x(rng() & low_mask(n), n);
        const BitString y(rng() & low_mask(n), n);
        const BitString z(rng() & low_mask(n), n);
        ASSERT_EQ(inner_product(x, y), inner_product(y, x));
        ASSERT_EQ(inner_product(x ^ y, z), inner_product(x, z) ^ inner_product(y, z));
        ASSERT_EQ(inner_product(x, y), brute::dot(x.word(), y.word()));
    }
}

TEST(BitString, msb_of_xor_is_bounded) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; trial++) {
        const int n = 1 + static_cast<int>(rng() % kMaxWidth);
        const BitString x(rng() & low_mask(n) >> (rng() % n), n);
        const BitString y(rng() & low_mask(n) >> (rng() % n), n);
        ASSERT_EQ(msb(x), brute::msb_naive(x.word()));
        const int mx = msb(x), my = msb(y);
        ASSERT_LE(msb(x ^ y), std::max(mx, my));
        if (mx != my) {
            ASSERT_EQ(msb(x ^ y), std::max(mx, my));
        }
    }
}
