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

#include <stdexcept>
#include <string>

namespace exactsimon {

int counting_lower_bound(int n) {
    if (n < 1 || n > kMaxWidth) {
        throw std::invalid_argument("width out of range");
    }
    const std::uint64_t target = std::uint64_t{1} << n;
    std::uint64_t k = 1;
    while (k * (k - 1) / 2 + 1 < target) {
        k++;
    }
    return static_cast<int>(k);
}

namespace {

// Covering sets for n <= 4 fit in a 16-bit mask.
class SubsetSearch {
   public:
    explicit SubsetSearch(int n) : universe_(Word{1} << n), full_((std::uint32_t{1} << universe_) - 1) {}

    bool find(int k, std::vector<Word>& out) {
        chosen_.assign(1, 0);
        if (dfs(1, k, 1u)) {
            out = chosen_;
            return true;
        }
        return false;
    }

   private:
    bool dfs(Word next, int k, std::uint32_t cover) {
        if (static_cast<int>(chosen_.size()) == k) {
            return cover == full_;
        }
        const int remaining = k - static_cast<int>(chosen_.size());
        for (Word w = next; w + static_cast<Word>(remaining) <= universe_; w++) {
            std::uint32_t added = cover;
            for (Word c : chosen_) {
                added |= std::uint32_t{1} << (c ^ w);
            }
            chosen_.push_back(w);
            if (dfs(w + 1, k, added)) {
                return true;
            }
            chosen_.pop_back();
        }
        return false;
    }

    Word universe_;
    std::uint32_t full_;
    std::vector<Word> chosen_;
};

}  // namespace

MinQuerySetResult min_query_set_size(int n) {
    MinQuerySetResult r;
    r.n = n;
    r.counting_bound = counting_lower_bound(n);
    if (n > kMaxExhaustiveWidth) {
        r.exact = false;
        r.size = r.counting_bound;
        return r;
    }
    SubsetSearch search(n);
    for (int k = r.counting_bound;; k++) {
        if (search.find(k, r.witness)) {
            r.exact = true;
            r.size = k;
            return r;
        }
    }
}

}  // namespace exactsimon
