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

#include "exactsimon/verification.h"

#include <gtest/gtest.h>

using namespace exactsimon;

namespace {

VerificationOptions small_options() {
    VerificationOptions o;
    o.quantum_max_n = 4;
    o.seeded_labelings = 2;
    o.lemma_max_n = 4;
    o.lemma_periods = 2;
    o.phase_max_n = 12;
    o.size_max_n = 12;
    o.generator_max_n = 8;
    o.solver_exhaustive_max_n = 5;
    o.solver_seeded_max_n = 7;
    o.solver_seeded_trials = 5;
    o.bounded_trials = 20;
    return o;
}

const CheckResult& by_name(const std::vector<CheckResult>& rs, const std::string& name) {
    for (const CheckResult& r : rs) {
        if (r.name == name) {
            return r;
        }
    }
    throw std::out_of_range(name);
}

}  // namespace

TEST(Verification, small_ranges_pass_and_stream_in_order) {
    std::vector<int> seen;
    const std::vector<CheckResult> rs =
        run_verification(small_options(), [&](const CheckResult& r) { seen.push_back(r.id); });
    ASSERT_EQ(rs.size(), 12u);
    for (std::size_t i = 0; i < rs.size(); i++) {
        ASSERT_EQ(rs[i].id, static_cast<int>(i) + 1);
        ASSERT_EQ(seen[i], rs[i].id);
        ASSERT_FALSE(rs[i].anchor.empty());
        if (rs[i].gating) {
            ASSERT_TRUE(rs[i].passed) << rs[i].name << ": " << rs[i].detail;
        }
    }
    ASSERT_TRUE(all_gating_passed(rs));
    ASSERT_FALSE(by_name(rs, "bounded-error").gating);
}

TEST(Verification, perturbed_phase_formula_is_caught) {
    VerificationOptions o = small_options();
    o.phase_fn = [](int n, int l) {
        PhasePair p = phases(n, l);
        p.varphi *= 1.01;
        return p;
    };
    const std::vector<CheckResult> rs = run_verification(o);
    ASSERT_FALSE(by_name(rs, "phase-condition").passed);
    ASSERT_FALSE(all_gating_passed(rs));
}
