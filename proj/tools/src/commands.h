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

#ifndef EXACTSIMON_TOOLS_COMMANDS_H
#define EXACTSIMON_TOOLS_COMMANDS_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "report.h"

namespace exactsimon::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitUsage = 2,
    kExitPromiseViolation = 3,
    kExitExactnessViolation = 4,
    kExitVerificationFailed = 5,
    kExitBudgetExhausted = 6,
};

/// Bad arguments detected after parsing (e.g. n above the simulation cap).
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Environment variable that overrides the quantum simulation width cap.
inline constexpr const char* kQuantumCapVariable = "EXACTSIMON_QUANTUM_MAX_N";

/// Reads the cap from the environment, warning on `err` about values that
/// are unparsable or above the hard limit.
int quantum_width_cap(std::ostream& err);

struct OracleArgs {
    std::optional<int> n;
    std::optional<int> m;
    std::optional<std::string> s;  ///< Bit literal, most significant bit first.
    std::optional<std::uint64_t> seed;  ///< Draws s when no literal is given.
    std::string labeling = "canonical";
    std::uint64_t labeling_seed = 0;
    std::optional<std::string> oracle_file;  ///< JSON oracle description.
    bool injective = false;
};

struct Common {
    OutputFormat format = OutputFormat::kText;
    std::ostream* out = nullptr;
    std::ostream* err = nullptr;
};

struct ExactArgs {
    OracleArgs oracle;
    std::uint64_t rng_seed = 0;
};

struct SimonArgs {
    OracleArgs oracle;
    std::uint64_t rng_seed = 0;
    int max_iter = 1000;
    int trials = 1;
};

struct QsetArgs {
    std::string action;  ///< gen, verify or minimize.
    int n = 0;
    std::string alg = "final";
    std::optional<std::string> file;
};

struct SolveArgs {
    OracleArgs oracle;
    std::string alg = "final";
    bool check_significance = false;
    bool audit_promise = false;
};

struct VerifyArgs {
    int quantum_max_n = 8;
    int classical_max_n = 16;
    std::uint64_t seed = 20260101;
    bool mutate_phase = false;
};

int run_exact_simon(const ExactArgs& args, const Common& io);
int run_simon(const SimonArgs& args, const Common& io);
int run_qset(const QsetArgs& args, const Common& io);
int run_solve_classical(const SolveArgs& args, const Common& io);
int run_verify_all(const VerifyArgs& args, const Common& io);

}  // namespace exactsimon::cli

#endif  // EXACTSIMON_TOOLS_COMMANDS_H
