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

#include "exactsimon/query_set.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "exactsimon/covering_set.h"
#include "testing/brute_force.h"

using namespace exactsimon;

namespace {

std::set<Word> as_set(const std::vector<Word>& v) {
    return {v.begin(), v.end()};
}

std::set<Word> low_block(int m) {
    std::set<Word> out;
    for (Word w = 0; w < (Word{1} << m); w++) {
        out.insert(w);
    }
    return out;
}

}  // namespace

TEST(QuerySetPreliminary, n3_output) {
    const QuerySet ys = query_set_preliminary(3);
    ASSERT_EQ(as_set(ys.values()), (std::set<Word>{0b000, 0b001, 0b010, 0b100, 0b101}));
    ASSERT_EQ(ys.kind(), GeneratorKind::kPreliminary);
    ASSERT_EQ(ys.last_round(), 2);
    ASSERT_EQ(ys.round(1), (std::vector<Word>{0b010}));
    ASSERT_EQ(ys.round(2), (std::vector<Word>{0b100, 0b101}));
}

TEST(QuerySetPreliminary, n2_output) {
    ASSERT_EQ(query_set_preliminary(2).values(), (std::vector<Word>{0b00, 0b01, 0b10}));
    ASSERT_THROW(query_set_preliminary(1), std::invalid_argument);
}

TEST(QuerySetPreliminary, sizes_follow_fibonacci) {
    for (int n = 2; n <= 24; n++) {
        const QuerySet ys = query_set_preliminary(n);
        std::size_t a = 2, b = 3;
        ASSERT_EQ(ys.prefix(0).size(), a);
        ASSERT_EQ(ys.prefix(1).size(), b);
        for (int k = 2; k <= n - 1; k++) {
            const std::size_t c = ys.prefix(k).size();
            ASSERT_EQ(c, a + b) << "n=" << n << " k=" << k;
            a = b;
            b = c;
        }
    }
}

TEST(QuerySetFinal, n3_output) {
    const QuerySet ys = query_set_final(3);
    ASSERT_EQ(ys.size(), 5u);
    ASSERT_EQ(as_set(ys.values()), (std::set<Word>{0b000, 0b001, 0b010, 0b101, 0b100}));
    ASSERT_EQ(ys.round(1), (std::vector<Word>{0b100, 0b101}));
    ASSERT_THROW(query_set_final(2), std::invalid_argument);
}

TEST(QuerySetFinal, known_sizes) {
    ASSERT_EQ(query_set_final(6).size(), 15u);
    ASSERT_EQ(query_set_final(9).size(), 47u);
    ASSERT_EQ(query_set_final(10).size(), 63u);
    ASSERT_EQ(query_set_preliminary(6).size(), 21u);
}

TEST(QuerySetFinal, size_formula_holds_to_n24) {
    for (int n = 3; n <= 24; n++) {
        ASSERT_EQ(query_set_final(n).size(), final_query_set_size(n)) << "n=" << n;
    }
    ASSERT_EQ(final_query_set_size(3), 5u);
    ASSERT_EQ(final_query_set_size(4), 7u);
}

TEST(QuerySet, elements_are_distinct_and_fit) {
    for (GeneratorKind kind : {GeneratorKind::kPreliminary, GeneratorKind::kFinal}) {
        for (int n = 3; n <= 16; n++) {
            const QuerySet ys = generate_query_set(kind, n);
            ASSERT_EQ(as_set(ys.values()).size(), ys.size());
            for (Word w : ys.values()) {
                ASSERT_LE(w, low_mask(n));
            }
            for (const QueryElement& e : ys.elements()) {
                ASSERT_EQ(e.round, round_from_msb(kind, e.value));
            }
        }
    }
}

TEST(QuerySet, without_and_errors) {
    const QuerySet ys = query_set_final(4);
    const QuerySet fewer = ys.without(0);
    ASSERT_EQ(fewer.size(), ys.size() - 1);
    ASSERT_EQ(fewer.values()[0], ys.values()[1]);
    ASSERT_THROW(QuerySet(3, GeneratorKind::kFinal, {{8, 0}}), std::invalid_argument);
    ASSERT_EQ(parse_generator_kind(to_string(GeneratorKind::kFinal)), GeneratorKind::kFinal);
    ASSERT_THROW(parse_generator_kind("optimal"), std::invalid_argument);
}

TEST(CoveringSet, small_examples) {
    const std::vector<Word> ys{0b000, 0b001, 0b010, 0b100, 0b101};
    const CoveringSet s = covering_set(3, ys);
    ASSERT_EQ(s.size(), 8u);
    ASSERT_TRUE(is_strict_significance(s, 3));

    const std::vector<Word> two{0b00, 0b11};
    const CoveringSet t = covering_set(2, two);
    ASSERT_EQ(t.members(), (std::vector<Word>{0b00, 0b11}));
    ASSERT_TRUE(is_significance(t, 0));
    ASSERT_FALSE(is_significance(t, 1));

    ASSERT_TRUE(covering_set(4, std::vector<Word>{}).size() == 0);
    ASSERT_EQ(covering_set(4, std::vector<Word>{5}).members(), (std::vector<Word>{0}));
}

TEST(CoveringSet, word_set_ranges) {
    WordSet s(8);
    for (Word w = 10; w < 20; w++) {
        s.insert(w);
    }
    s.insert(10);
    ASSERT_EQ(s.size(), 10u);
    ASSERT_TRUE(s.contains_range(10, 20));
    ASSERT_FALSE(s.contains_range(9, 20));
    ASSERT_TRUE(s.contains_range(5, 5));
}

TEST(CoveringSet, matches_pairwise_enumeration) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; trial++) {
        const int n = 1 + static_cast<int>(rng() % 10);
        std::vector<Word> ys;
        const int count = static_cast<int>(rng() % 12);
        for (int i = 0; i < count; i++) {
            ys.push_back(rng() & low_mask(n));
        }
        const CoveringSet s = covering_set(n, ys);
        const std::set<Word> want = brute::pairwise_xor(ys);
        ASSERT_EQ(as_set(s.members()), want);
        if (!ys.empty()) {
            ASSERT_LE(s.size(), ys.size() * (ys.size() - 1) / 2 + 1);
        }
        std::vector<Word> shifted;
        const Word t = rng() & low_mask(n);
        for (Word y : ys) {
            shifted.push_back(y ^ t);
        }
        ASSERT_EQ(covering_set(n, shifted).members(), s.members());
    }
}

TEST(CoveringSet, cross_xor_matches_enumeration) {
    const std::vector<Word> a{1, 2, 7};
    const std::vector<Word> b{0, 4};
    ASSERT_EQ(as_set(cross_xor(3, a, b).members()), (std::set<Word>{1, 2, 7, 5, 6, 3}));
}

TEST(Significance, generators_are_strictly_significant_by_enumeration) {
    for (int n = 3; n <= 10; n++) {
        ASSERT_EQ(brute::pairwise_xor(query_set_final(n).values()), low_block(n)) << n;
        ASSERT_EQ(brute::pairwise_xor(query_set_preliminary(n).values()), low_block(n)) << n;
        ASSERT_TRUE(is_strict_significance(query_set_final(n), n));
        ASSERT_TRUE(is_significance(query_set_preliminary(n), n));
    }
}

TEST(Significance, strictness_is_stronger) {
    // {0, 1, 8}: covers {0, 1} plus 8 and 9, so it is 1-significant but not strictly.
    const std::vector<Word> ys{0, 1, 8};
    const CoveringSet s = covering_set(4, ys);
    ASSERT_TRUE(is_significance(s, 1));
    ASSERT_FALSE(is_strict_significance(s, 1));
    ASSERT_FALSE(is_significance(s, 2));
}
