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

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace exactsimon {

std::string_view to_string(GeneratorKind kind) {
    return kind == GeneratorKind::kPreliminary ? "preliminary" : "final";
}

GeneratorKind parse_generator_kind(std::string_view text) {
    if (text == "preliminary") {
        return GeneratorKind::kPreliminary;
    }
    if (text == "final") {
        return GeneratorKind::kFinal;
    }
    throw std::invalid_argument("unknown query-set algorithm '" + std::string(text) + "'");
}

QuerySet::QuerySet(int n, GeneratorKind kind, std::vector<QueryElement> elements)
    : n_(n), kind_(kind), elements_(std::move(elements)) {
    if (n < 1 || n > kMaxWidth) {
        throw std::invalid_argument("query set width must be in [1, " + std::to_string(kMaxWidth) + "]");
    }
    for (const QueryElement& e : elements_) {
        if (e.value > low_mask(n)) {
            throw std::invalid_argument("query set element does not fit in n bits");
        }
    }
}

int QuerySet::last_round() const noexcept {
    int r = 0;
    for (const QueryElement& e : elements_) {
        r = std::max(r, e.round);
    }
    return r;
}

std::vector<Word> QuerySet::prefix(int k) const {
    std::vector<Word> out;
    for (const QueryElement& e : elements_) {
        if (e.round <= k) {
            out.push_back(e.value);
        }
    }
    return out;
}

std::vector<Word> QuerySet::round(int k) const {
    std::vector<Word> out;
    for (const QueryElement& e : elements_) {
        if (e.round == k) {
            out.push_back(e.value);
        }
    }
    return out;
}

std::vector<Word> QuerySet::values() const {
    std::vector<Word> out;
    out.reserve(elements_.size());
    for (const QueryElement& e : elements_) {
        out.push_back(e.value);
    }
    return out;
}

std::vector<BitString> QuerySet::strings() const {
    std::vector<BitString> out;
    out.reserve(elements_.size());
    for (const QueryElement& e : elements_) {
        out.emplace_back(e.value, n_);
    }
    return out;
}

QuerySet QuerySet::without(std::size_t index) const {
    std::vector<QueryElement> kept = elements_;
    kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(index));
    return QuerySet(n_, kind_, std::move(kept));
}

namespace {

void append_round(std::vector<QueryElement>& elements, std::vector<Word> z, int k) {
    std::sort(z.begin(), z.end());
    for (Word w : z) {
        elements.push_back({w, k});
    }
}

}  // namespace

QuerySet query_set_preliminary(int n) {
    if (n <= 1 || n > kMaxWidth) {
        throw std::invalid_argument("preliminary query set needs 1 < n <= " + std::to_string(kMaxWidth));
    }
    std::vector<QueryElement> elements{{0b0, 0}, {0b1, 0}};
    for (int k = 1; k <= n - 1; k++) {
        std::vector<Word> z;
        for (const QueryElement& e : elements) {
            if (msb(e.value) < k) {
                z.push_back((Word{1} << k) ^ e.value);
            }
        }
        append_round(elements, std::move(z), k);
    }
    return QuerySet(n, GeneratorKind::kPreliminary, std::move(elements));
}

QuerySet query_set_final(int n) {
    if (n <= 2 || n > kMaxWidth) {
        throw std::invalid_argument("final query set needs 2 < n <= " + std::to_string(kMaxWidth));
    }
    std::vector<QueryElement> elements{{0b0, 0}, {0b1, 0}, {0b10, 0}};
    for (int k = 1; k <= n - 2; k++) {
        std::vector<Word> z;
        for (const QueryElement& e : elements) {
            if (msb(e.value) == k) {
                z.push_back((Word{1} << (k + 1)) ^ e.value);
                z.push_back((Word{1} << (k + 1)) ^ (Word{1} << (k - 1)) ^ e.value);
            }
        }
        append_round(elements, std::move(z), k);
    }
    return QuerySet(n, GeneratorKind::kFinal, std::move(elements));
}

QuerySet generate_query_set(GeneratorKind kind, int n) {
    return kind == GeneratorKind::kPreliminary ? query_set_preliminary(n) : query_set_final(n);
}

std::size_t final_query_set_size(int n) {
    return (std::size_t{1} << ((n + 1) / 2)) + (std::size_t{1} << (n / 2)) - 1;
}

int round_from_msb(GeneratorKind kind, Word value) {
    const int offset = kind == GeneratorKind::kPreliminary ? 1 : 2;
    return std::max(0, msb(value) - offset);
}

}  // namespace exactsimon
