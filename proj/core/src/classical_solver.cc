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

#include "exactsimon/classical_solver.h"

#include <stdexcept>
#include <string>
#include <unordered_map>

#include "exactsimon/covering_set.h"

namespace exactsimon {

ClassicalOutcome solve_classical(SimonOracle& oracle, const QuerySet& ys, const SolveOptions& options) {
    const int n = ys.n();
    if (oracle.n() != n) {
        throw std::invalid_argument("query set width does not match the oracle");
    }
    if (options.check_significance && !is_significance(ys, n)) {
        throw std::invalid_argument("query set is not " + std::to_string(n) + "-significant");
    }

    const std::uint64_t start = oracle.classical_queries();
    std::unordered_map<Word, Word> first_seen;  // f value -> the string that produced it
    std::unordered_map<Word, int> hits;
    first_seen.reserve(ys.size());
    ClassicalOutcome outcome;
    for (const QueryElement& e : ys.elements()) {
        const Word fx = oracle.classical_query(BitString(e.value, n));
        auto [it, fresh] = first_seen.try_emplace(fx, e.value);
        if (fresh || it->second == e.value) {
            continue;
        }
        const BitString candidate(it->second ^ e.value, n);
        if (!options.audit_promise) {
            outcome.period = candidate;
            break;
        }
        if (++hits[fx] > 1) {
            throw PromiseViolation("three query strings share the value " + std::to_string(fx));
        }
        if (outcome.period && *outcome.period != candidate) {
            throw PromiseViolation("collisions imply two different periods " + outcome.period->to_string() + " and " +
                                   candidate.to_string());
        }
        outcome.period = candidate;
    }
    outcome.queries = oracle.classical_queries() - start;
    return outcome;
}

}  // namespace exactsimon
