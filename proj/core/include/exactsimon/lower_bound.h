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

#ifndef EXACTSIMON_LOWER_BOUND_H
#define EXACTSIMON_LOWER_BOUND_H

#include <cstdint>
#include <vector>

#include "exactsimon/bitstring.h"

namespace exactsimon {

/// Largest n for which min_query_set_size runs the exhaustive search.
inline constexpr int kMaxExhaustiveWidth = 4;

/// Smallest k with C(k, 2) + 1 >= 2^n: a set of k strings has at most that
/// many distinct pairwise XORs (counting 0^n once).
int counting_lower_bound(int n);

struct MinQuerySetResult {
    int n = 0;
    int counting_bound = 0;
    bool exact = false;       ///< False when n was too large to search.
    int size = 0;             ///< Minimum size when exact, else the counting bound.
    std::vector<Word> witness;  ///< An n-significant set of that size (exact only).
};

/// Exhaustive search for the smallest n-significant set.
///
/// Every such set can be XOR-translated to contain 0^n without changing its
/// covering set, so only subsets containing 0^n are enumerated, by iterative
/// deepening upward from the counting bound. For n > kMaxExhaustiveWidth
/// the search is refused and only the counting bound is returned.
MinQuerySetResult min_query_set_size(int n);

}  // namespace exactsimon

#endif  // EXACTSIMON_LOWER_BOUND_H
