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

#include "exactsimon/generator_invariants.h"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "exactsimon/covering_set.h"

namespace exactsimon {

bool InvariantReport::ok() const noexcept {
    return failures() == 0;
}

std::size_t InvariantReport::failures() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const InvariantCheck& c) { return !c.passed; }));
}

std::string InvariantReport::summary() const {
    std::ostringstream out;
    for (const InvariantCheck& c : checks) {
        if (!c.passed) {
            out << c.name << " @k=" << c.round << ": " << c.detail << "\n";
        }
    }
    return out.str();
}

namespace {

std::string bits(Word w, int n) {
    return BitString(w, n).to_string();
}

class Auditor {
   public:
    explicit Auditor(const QuerySet& trace) : trace_(trace), n_(trace.n()) {}

    InvariantReport run() {
        const bool prelim = trace_.kind() == GeneratorKind::kPreliminary;
        offset_ = prelim ? 1 : 2;
        expected_last_ = n_ - offset_;
        if (!structure()) {
            return std::move(report_);
        }
        CoveringSet cover(n_);
        std::vector<Word> prefix;
        for (int k = 0; k <= expected_last_; k++) {
            const std::vector<Word> z = trace_.round(k);
            // Incremental S(Y^(k)) = S(Y^(k-1)) u {a ^ b : a in Z^(k), b in Y^(k)}.
            prefix.insert(prefix.end(), z.begin(), z.end());
            for (Word a : z) {
                for (Word b : prefix) {
                    cover.insert(a ^ b);
                }
            }
            const int level = k + offset_;
            max_msb(k, prefix, level);
            if (k >= 1) {
                round_msb(k, z, level);
            }
            if (prelim && k >= 2) {
                prelim_recurrence(k);
            }
            if (!prelim && k >= 3) {
                final_recurrence(k);
            }
            if (!prelim) {
                second_bit_clear(k, prefix);
            }
            strict_significance(k, cover, level);
            cross_cover(k, prefix, level);
            if (!prelim) {
                top_pair_cover(k, prefix, level);
            }
        }
        return std::move(report_);
    }

   private:
    void add(std::string name, int k, bool passed, std::string detail = {}) {
        report_.checks.push_back({std::move(name), k, passed, passed ? std::string() : std::move(detail)});
    }

    bool structure() {
        const auto& el = trace_.elements();
        bool ok = true;
        if (n_ <= offset_) {
            add("width", 0, false, "generator needs n > " + std::to_string(offset_));
            return false;
        }
        std::unordered_set<Word> seen;
        std::string dup;
        for (const QueryElement& e : el) {
            if (!seen.insert(e.value).second && dup.empty()) {
                dup = bits(e.value, n_);
            }
        }
        add("distinct", 0, dup.empty(), "duplicate element " + dup);
        ok &= dup.empty();

        std::vector<Word> initial = trace_.round(0);
        std::sort(initial.begin(), initial.end());
        std::vector<Word> expected{0, 1};
        if (offset_ == 2) {
            expected.push_back(2);
        }
        const bool init_ok = initial == expected;
        add("initial-set", 0, init_ok, "round 0 does not match the generator's starting set");
        ok &= init_ok;

        bool ordered = true;
        for (std::size_t i = 1; i < el.size(); i++) {
            ordered &= el[i - 1].round <= el[i].round;
        }
        add("round-major-order", 0, ordered, "rounds decrease somewhere in the element order");
        ok &= ordered;

        bool range = std::all_of(el.begin(), el.end(),
                                 [&](const QueryElement& e) { return e.round >= 0 && e.round <= expected_last_; });
        range &= trace_.last_round() == expected_last_;
        add("round-count", 0, range,
            "expected rounds 0.." + std::to_string(expected_last_) + ", last round is " +
                std::to_string(trace_.last_round()));
        ok &= range;
        return ok;
    }

    void max_msb(int k, const std::vector<Word>& y, int level) {
        int best = 0;
        for (Word w : y) {
            best = std::max(best, msb(w));
        }
        add("max-msb", k, best == level,
            "max msb is " + std::to_string(best) + ", expected " + std::to_string(level));
    }

    void round_msb(int k, const std::vector<Word>& z, int level) {
        for (Word w : z) {
            if (msb(w) != level) {
                add("round-msb", k, false, bits(w, n_) + " has msb " + std::to_string(msb(w)));
                return;
            }
        }
        add("round-msb", k, !z.empty(), "round is empty");
    }

    void compare_round(const std::string& name, int k, std::vector<Word> expected) {
        std::vector<Word> actual = trace_.round(k);
        std::sort(actual.begin(), actual.end());
        std::sort(expected.begin(), expected.end());
        add(name, k, actual == expected,
            "round has " + std::to_string(actual.size()) + " elements, recurrence predicts " +
                std::to_string(expected.size()) + " (or they differ)");
    }

    void prelim_recurrence(int k) {
        std::vector<Word> expected;
        for (Word y : trace_.prefix(k - 2)) {
            expected.push_back((Word{1} << k) ^ y);
        }
        compare_round("round-recurrence", k, std::move(expected));
    }

    void final_recurrence(int k) {
        std::vector<Word> expected;
        for (Word z : trace_.round(k - 2)) {
            expected.push_back((Word{1} << (k + 1)) ^ z);
            expected.push_back((Word{1} << (k + 1)) ^ (Word{1} << (k - 1)) ^ z);
        }
        compare_round("round-recurrence", k, std::move(expected));
    }

    void second_bit_clear(int k, const std::vector<Word>& y) {
        for (Word w : y) {
            const int j = msb(w);
            if (j >= 2 && ((w >> (j - 2)) & 1)) {
                add("second-bit-clear", k, false, bits(w, n_) + " has both x_j and x_{j-1} set");
                return;
            }
        }
        add("second-bit-clear", k, true);
    }

    void strict_significance(int k, const CoveringSet& cover, int level) {
        const bool ok = is_strict_significance(cover, level);
        add("strict-significance", k, ok,
            "covering set has " + std::to_string(cover.size()) + " members, expected exactly 0^(n-" +
                std::to_string(level) + "){0,1}^" + std::to_string(level));
    }

    void split_by_msb(const std::vector<Word>& y, int level, std::vector<Word>& top, std::vector<Word>& below,
                      std::vector<Word>& second) {
        for (Word w : y) {
            const int b = msb(w);
            if (b == level) {
                top.push_back(w);
            } else if (b < level) {
                below.push_back(w);
                if (b == level - 1) {
                    second.push_back(w);
                }
            }
        }
    }

    void cross_cover(int k, const std::vector<Word>& y, int level) {
        std::vector<Word> top, below, second;
        split_by_msb(y, level, top, below, second);
        const WordSet x = cross_xor(n_, top, below);
        const Word lo = Word{1} << (level - 1);
        const Word hi = Word{1} << level;
        add("cross-cover-msb", k, x.contains_range(lo, hi),
            "{a^b : msb(a)=" + std::to_string(level) + ", msb(b)<" + std::to_string(level) +
                "} misses a string with that msb");
    }

    void top_pair_cover(int k, const std::vector<Word>& y, int level) {
        if (level < 2) {
            return;
        }
        std::vector<Word> top, below, second;
        split_by_msb(y, level, top, below, second);
        const WordSet u = cross_xor(n_, top, second);
        const Word lo = (Word{1} << (level - 1)) | (Word{1} << (level - 2));
        const Word hi = Word{1} << level;
        add("top-pair-cover", k, u.contains_range(lo, hi),
            "{d^e : msb(d)=" + std::to_string(level) + ", msb(e)=" + std::to_string(level - 1) +
                "} misses a string with prefix 11");
    }

    const QuerySet& trace_;
    int n_;
    int offset_ = 1;
    int expected_last_ = 0;
    InvariantReport report_;
};

}  // namespace

InvariantReport check_generator_invariants(const QuerySet& trace) {
    return Auditor(trace).run();
}

}  // namespace exactsimon
