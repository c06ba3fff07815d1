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

#ifndef EXACTSIMON_QUERY_SET_H
#define EXACTSIMON_QUERY_SET_H

#include <cstddef>
#include <string_view>
#include <vector>

#include "exactsimon/bitstring.h"

namespace exactsimon {

enum class GeneratorKind {
    kPreliminary,  ///< Fibonacci-sized: adds 2^k ^ y for every y with msb(y) < k.
    kFinal,        ///< ~2 sqrt(2^n): adds two strings per y with msb(y) = k.
};

std::string_view to_string(GeneratorKind kind);
GeneratorKind parse_generator_kind(std::string_view text);

struct QueryElement {
    Word value = 0;
    int round = 0;  ///< 0 for initial elements, k for those added in round k.

    friend bool operator==(const QueryElement&, const QueryElement&) = default;
};

/// Ordered query set with per-element generation round.
///
/// Elements are stored round-major, so the generator's intermediate set
/// Y^(k) is the prefix of elements with round <= k and Z^(k) is the block
/// with round == k. The set doubles as the generation trace.
class QuerySet {
   public:
    QuerySet(int n, GeneratorKind kind, std::vector<QueryElement> elements = {});

    int n() const noexcept { return n_; }
    GeneratorKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<QueryElement>& elements() const noexcept { return elements_; }

    /// Highest round index present (0 for an initial-only set).
    int last_round() const noexcept;

    /// Values of Y^(k): every element with round <= k, in order.
    std::vector<Word> prefix(int k) const;

    /// Values of Z^(k): elements added in round k.
    std::vector<Word> round(int k) const;

    std::vector<Word> values() const;
    std::vector<BitString> strings() const;

    /// Drops the element at `index`. Used by mutation tests.
    QuerySet without(std::size_t index) const;

    friend bool operator==(const QuerySet&, const QuerySet&) = default;

   private:
    int n_;
    GeneratorKind kind_;
    std::vector<QueryElement> elements_;
};

/// Start from {0^n, 0^{n-1}1}; for k = 1 .. n-1 add {2^k ^ y : y in Y,
/// msb(y) < k}. Every Y^(k) is strictly (k+1)-significant. Requires n > 1.
QuerySet query_set_preliminary(int n);

/// Start from {0^n, 0^{n-1}1, 0^{n-2}10}; for k = 1 .. n-2 and each y with
/// msb(y) = k add 2^{k+1} ^ y and 2^{k+1} ^ 2^{k-1} ^ y. Every Y^(k) is
/// strictly (k+2)-significant and |Y| = 2^ceil(n/2) + 2^floor(n/2) - 1.
/// Requires n > 2.
QuerySet query_set_final(int n);

QuerySet generate_query_set(GeneratorKind kind, int n);

/// 2^ceil(n/2) + 2^floor(n/2) - 1.
std::size_t final_query_set_size(int n);

/// Round an element of the given generator lands in, read off its msb:
/// msb - 1 (preliminary) or msb - 2 (final), and 0 for the initial strings.
int round_from_msb(GeneratorKind kind, Word value);

}  // namespace exactsimon

#endif  // EXACTSIMON_QUERY_SET_H
