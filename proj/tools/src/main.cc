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

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.h"
#include "exactsimon/query_set_io.h"
#include "exactsimon/simon.h"

using namespace exactsimon;
using namespace exactsimon::cli;

namespace {

void add_oracle_options(CLI::App* cmd, OracleArgs& a, bool allow_injective) {
    cmd->add_option("--n", a.n, "Input width n");
    cmd->add_option("--m", a.m, "Output width m (default n)");
    auto* s = cmd->add_option("--s", a.s, "Hidden string, most significant bit first");
    cmd->add_option("--seed", a.seed, "Draw a nonzero hidden string from this seed")->excludes(s);
    cmd->add_option("--labeling", a.labeling, "Output labeling")
        ->check(CLI::IsMember({"canonical", "seeded"}));
    cmd->add_option("--labeling-seed", a.labeling_seed, "Seed for the seeded labeling");
    cmd->add_option("--oracle", a.oracle_file, "JSON oracle description {n, m, s, mode, seed | table}")
        ->check(CLI::ExistingFile);
    if (allow_injective) {
        cmd->add_flag("--injective", a.injective, "Use a one-to-one function instead of a periodic one")
            ->excludes(s);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and bounded-error quantum and deterministic classical solvers for Simon's problem"};
    app.set_version_flag("--version", std::string("exactsimon ") + EXACTSIMON_VERSION);
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    ExactArgs exact;
    auto* exact_cmd = app.add_subcommand("exact-simon", "Exact quantum algorithm (3n-3 queries)");
    add_oracle_options(exact_cmd, exact.oracle, false);
    exact_cmd->add_option("--rng-seed", exact.rng_seed, "Measurement seed");

    SimonArgs simon;
    auto* simon_cmd = app.add_subcommand("simon", "Bounded-error quantum algorithm");
    add_oracle_options(simon_cmd, simon.oracle, true);
    simon_cmd->add_option("--rng-seed", simon.rng_seed, "Measurement seed");
    simon_cmd->add_option("--max-iter", simon.max_iter, "Iteration budget per run");
    simon_cmd->add_option("--trials", simon.trials, "Repeat and report aggregate statistics");

    QsetArgs qset;
    auto* qset_cmd = app.add_subcommand("qset", "Generate, verify or minimize classical query sets");
    qset_cmd->add_option("action", qset.action, "gen, verify or minimize")
        ->required()
        ->check(CLI::IsMember({"gen", "verify", "minimize"}));
    qset_cmd->add_option("--n", qset.n, "Width n");
    qset_cmd->add_option("--alg", qset.alg, "Generator")->check(CLI::IsMember({"preliminary", "final"}));
    qset_cmd->add_option("--file,--out", qset.file, "Query-set file to write (gen) or read (verify)");

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve-classical", "Deterministic classical solver");
    add_oracle_options(solve_cmd, solve.oracle, true);
    solve_cmd->add_option("--alg", solve.alg, "Query-set generator")
        ->check(CLI::IsMember({"preliminary", "final"}));
    solve_cmd->add_flag("--check-significance", solve.check_significance,
                        "Recompute the covering set and refuse unless it is n-significant");
    solve_cmd->add_flag("--audit-promise", solve.audit_promise,
                        "Query the whole set and report promise violations");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify-all", "Run every acceptance check");
    verify_cmd->add_option("--quantum-max-n", verify.quantum_max_n, "Largest n for quantum sweeps");
    verify_cmd->add_option("--classical-max-n", verify.classical_max_n, "Largest n for generator audits");
    verify_cmd->add_option("--seed", verify.seed, "Seed for randomized checks");
    verify_cmd->add_flag("--mutate-phase", verify.mutate_phase, "Perturb the phase formula")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Common io;
    io.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;
    io.out = &std::cout;
    io.err = &std::cerr;
    try {
        if (*exact_cmd) {
            return run_exact_simon(exact, io);
        }
        if (*simon_cmd) {
            return run_simon(simon, io);
        }
        if (*qset_cmd) {
            return run_qset(qset, io);
        }
        if (*solve_cmd) {
            return run_solve_classical(solve, io);
        }
        return run_verify_all(verify, io);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MalformedQuerySetFile& e) {
        std::cerr << "malformed query-set file: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PromiseViolation& e) {
        std::cerr << "promise violation: " << e.what() << "\n";
        return kExitPromiseViolation;
    } catch (const ExactnessViolation& e) {
        std::cerr << "exactness violation: " << e.what() << "\n";
        return kExitExactnessViolation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
