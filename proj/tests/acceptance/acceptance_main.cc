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

// Runs every acceptance criterion at full range and prints one line each.
// Exit status is nonzero iff a gating criterion fails.

#include <cstdio>
#include <exception>

#include "exactsimon/verification.h"

int main() {
    using namespace exactsimon;
    try {
        const std::vector<CheckResult> results = run_verification(VerificationOptions{}, [](const CheckResult& r) {
            const char* verdict = r.passed ? "PASS" : (r.gating ? "FAIL" : "SOFT");
            std::printf("%s  %2d %-20s %7.2fs  %s [%s]\n", verdict, r.id, r.name.c_str(), r.seconds,
                        r.detail.c_str(), r.anchor.c_str());
            std::fflush(stdout);
        });
        const bool ok = all_gating_passed(results);
        std::printf("%s\n", ok ? "acceptance: all gating criteria passed" : "acceptance: FAILED");
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance: internal error: %s\n", e.what());
        return 1;
    }
}
