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

#include "exactsimon/lower_bound.h"

#include <gtest/gtest.h>

#include "exactsimon/query_set.h"
#include "testing/brute_force.h"

using namespace exactsimon;

namespace {

// Smallest k with k(k-1)/2 + 1 >= 2^n, by counting up.
int counting_bound_naive(int n) {
    int k = 1;
    while (static_cast<Word>(k) * (k - 1) / 2 + 1 < (Word{1} << n)) {
        k++;
    }
    return k;
}

}  // namespace

TEST(LowerBound, counting_bound_matches_naive) {
    for (int n = 1; n <= 30; n++) {
        ASSERT_EQ(counting_lower_bound(n), counting_bound_naive(n)) << n;
    }
    ASSERT_EQ(counting_lower_bound(2), 3);
    ASSERT_EQ(counting_lower_bound(3), 5);
    ASSERT_EQ(counting_lower_bound(4), 6);
}

TEST(LowerBound, small_widths_are_exact) {
    const int want[] = {0, 2, 3, 5, 6};
    for (int n = 1; n <= 4; n++) {
        const MinQuerySetResult r = min_query_set_size(n);
        ASSERT_TRUE(r.exact);
        ASSERT_EQ(r.size, want[n]) << n;
        ASSERT_EQ(r.witness.size(), static_cast<std::size_t>(r.size));
        ASSERT_GE(r.size, r.counting_bound);
        ASSERT_EQ(brute::pairwise_xor(r.witness).size(), std::size_t{1} << n);
    }
    ASSERT_EQ(min_query_set_size(3).size, static_cast<int>(query_set_final(3).size()));
}

TEST(LowerBound, large_widths_report_only_the_counting_bound) {
    const MinQuerySetResult r = min_query_set_size(5);
    ASSERT_FALSE(r.exact);
    ASSERT_EQ(r.size, counting_lower_bound(5));
    ASSERT_TRUE(r.witness.empty());
}
