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

#include "commands.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "exactsimon/classical_solver.h"
#include "exactsimon/covering_set.h"
#include "exactsimon/generator_invariants.h"
#include "exactsimon/lower_bound.h"
#include "exactsimon/query_set_io.h"
#include "exactsimon/simon.h"
#include "exactsimon/verification.h"

namespace exactsimon::cli {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::ordered_json;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::string> literals(const std::vector<BitString>& zs) {
    std::vector<std::string> out;
    for (const BitString& z : zs) {
        out.push_back(z.to_string());
    }
    return out;
}

Word nonzero_from_seed(std::uint64_t seed, int n) {
    Rng rng(seed);
    Word w = 0;
    while (w == 0) {
        w = rng() & low_mask(n);
    }
    return w;
}

SimonOracle oracle_from_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open oracle file '" + path + "'");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
        const int n = doc.at("n").get<int>();
        const int m = doc.value("m", n);
        const LabelingMode mode = parse_labeling_mode(doc.value("mode", std::string("canonical")));
        if (mode == LabelingMode::kTable) {
            return SimonOracle::from_table(n, m, doc.at("table").get<std::vector<Word>>());
        }
        const std::string s = doc.value("s", std::string());
        const std::uint64_t seed = doc.value("seed", std::uint64_t{0});
        if (s.empty() || BitString::parse(s).is_zero()) {
            return SimonOracle::make_injective(n, m, mode == LabelingMode::kSeeded ? std::optional(seed) : std::nullopt);
        }
        return SimonOracle::make_simon(n, m, BitString::parse(s), mode, seed);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("bad oracle file '" + path + "': " + e.what());
    }
}

// Builds the oracle described by the flags and records it in the report.
SimonOracle build_oracle(const OracleArgs& a, RunReport& report) {
    ordered_json& p = report.parameters;
    if (a.oracle_file) {
        SimonOracle f = oracle_from_json(*a.oracle_file);
        p["oracle_file"] = *a.oracle_file;
        p["n"] = f.n();
        p["m"] = f.m();
        p["labeling"] = std::string(to_string(f.mode()));
        if (f.mode() != LabelingMode::kTable) {
            p["s"] = f.period().to_string();
        }
        return f;
    }
    if (!a.n) {
        throw UsageError("--n is required unless --oracle is given");
    }
    const int n = *a.n;
    if (n < 1 || n > kMaxWidth) {
        throw UsageError("--n must be in [1, " + std::to_string(kMaxWidth) + "]");
    }
    const int m = a.m.value_or(n);
    const LabelingMode mode = parse_labeling_mode(a.labeling);
    if (mode == LabelingMode::kTable) {
        throw UsageError("table labelings come from --oracle files");
    }
    p["n"] = n;
    p["m"] = m;
    p["labeling"] = a.labeling;
    if (mode == LabelingMode::kSeeded) {
        p["labeling_seed"] = a.labeling_seed;
    }
    const std::optional<std::uint64_t> label_seed =
        mode == LabelingMode::kSeeded ? std::optional(a.labeling_seed) : std::nullopt;
    if (a.injective) {
        p["s"] = BitString::zero(n).to_string();
        p["injective"] = true;
        return SimonOracle::make_injective(n, m, label_seed);
    }
    BitString s = BitString::zero(n);
    if (a.s) {
        s = BitString::parse(*a.s);
        if (s.width() != n) {
            throw UsageError("--s has " + std::to_string(s.width()) + " bits but --n is " + std::to_string(n));
        }
        p["s_source"] = "explicit";
    } else if (a.seed) {
        s = BitString(nonzero_from_seed(*a.seed, n), n);
        p["s_source"] = "seed";
        p["seed"] = *a.seed;
    } else {
        throw UsageError("give the hidden string with --s or draw it with --seed");
    }
    p["s"] = s.to_string();
    return SimonOracle::make_simon(n, m, s, mode, a.labeling_seed);
}

void require_quantum_width(int n, int min_n, const Common& io) {
    const int cap = quantum_width_cap(*io.err);
    if (n < min_n || n > cap) {
        throw UsageError("quantum simulation needs " + std::to_string(min_n) + " <= n <= " + std::to_string(cap) +
                         " (cap set by " + kQuantumCapVariable + "), got n=" + std::to_string(n));
    }
}

void record_period(RunReport& report, const SimonOracle& f, const BitString& found) {
    report.outcome["s"] = found.to_string();
    if (f.mode() != LabelingMode::kTable) {
        report.outcome["correct"] = found == f.period();
    }
}

}  // namespace

int quantum_width_cap(std::ostream& err) {
    const char* raw = std::getenv(kQuantumCapVariable);
    if (raw == nullptr || *raw == '\0') {
        return kDefaultQuantumWidthCap;
    }
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 1) {
        err << "warning: ignoring " << kQuantumCapVariable << "='" << raw << "'; using "
            << kDefaultQuantumWidthCap << "\n";
        return kDefaultQuantumWidthCap;
    }
    if (v > kHardQuantumWidthCap) {
        err << "warning: " << kQuantumCapVariable << "=" << v << " exceeds the hard limit; using "
            << kHardQuantumWidthCap << "\n";
        return kHardQuantumWidthCap;
    }
    return static_cast<int>(v);
}

int run_exact_simon(const ExactArgs& args, const Common& io) {
    RunReport report;
    report.command = "exact-simon";
    const auto start = Clock::now();
    SimonOracle f = build_oracle(args.oracle, report);
    require_quantum_width(f.n(), 2, io);
    report.parameters["rng_seed"] = args.rng_seed;

    const ExactSimonResult r = exact_simon(f, args.rng_seed);
    record_period(report, f, r.period);
    report.outcome["max_bad_mass"] = r.max_bad_mass;
    report.outcome["bad_mass"] = r.bad_mass;
    report.outcome["measurements"] = literals(r.measurements);
    report.queries["quantum"] = r.query_count;
    report.queries["expected"] = 3 * static_cast<std::uint64_t>(f.n()) - 3;
    report.queries["classical"] = f.classical_queries();
    report.timing["seconds"] = seconds_since(start);
    report.write(*io.out, io.format);
    return kExitOk;
}

int run_simon(const SimonArgs& args, const Common& io) {
    RunReport report;
    report.command = "simon";
    const auto start = Clock::now();
    if (args.trials < 1 || args.max_iter < 1) {
        throw UsageError("--trials and --max-iter must be positive");
    }

    if (args.trials == 1) {
        SimonOracle f = build_oracle(args.oracle, report);
        require_quantum_width(f.n(), 1, io);
        report.parameters["rng_seed"] = args.rng_seed;
        report.parameters["max_iter"] = args.max_iter;
        int code = kExitOk;
        BoundedSimonResult r;
        try {
            r = simon_bounded(f, args.rng_seed, args.max_iter);
            record_period(report, f, r.period);
        } catch (const IterationBudgetExhausted& e) {
            r = e.partial();
            report.error = e.what();
            code = kExitBudgetExhausted;
        }
        report.outcome["iterations"] = r.iterations;
        report.outcome["measurements"] = literals(r.measurements);
        report.queries["quantum"] = r.quantum_queries;
        report.queries["classical"] = f.classical_queries();
        report.timing["seconds"] = seconds_since(start);
        report.write(*io.out, io.format);
        return code;
    }

    // Statistical mode: with --seed each trial draws its own s; the labeling
    // seed (when seeded) and the measurement seed advance per trial.
    if (args.oracle.oracle_file || args.oracle.injective) {
        throw UsageError("--trials needs an oracle given by --n with --s or --seed");
    }
    if (!args.oracle.n || (!args.oracle.s && !args.oracle.seed)) {
        throw UsageError("--trials needs --n and one of --s or --seed");
    }
    Rng trial_rng(args.rng_seed);
    Rng s_rng(args.oracle.seed.value_or(0));
    int wrong = 0, exhausted = 0, max_iterations = 0;
    long total_iterations = 0;
    std::uint64_t total_queries = 0;
    for (int t = 0; t < args.trials; t++) {
        OracleArgs per_trial = args.oracle;
        if (!args.oracle.s) {
            per_trial.seed = s_rng();
        }
        per_trial.labeling_seed = args.oracle.labeling_seed + static_cast<std::uint64_t>(t);
        RunReport scratch;
        SimonOracle f = build_oracle(per_trial, scratch);
        if (t == 0) {
            require_quantum_width(f.n(), 1, io);
        }
        try {
            const BoundedSimonResult r = simon_bounded(f, trial_rng(), args.max_iter);
            wrong += r.period != f.period();
            total_iterations += r.iterations;
            max_iterations = std::max(max_iterations, r.iterations);
            total_queries += r.quantum_queries;
        } catch (const IterationBudgetExhausted& e) {
            exhausted++;
            total_iterations += e.partial().iterations;
            total_queries += e.partial().quantum_queries;
        }
    }
    ordered_json& p = report.parameters;
    p["n"] = *args.oracle.n;
    p["m"] = args.oracle.m.value_or(*args.oracle.n);
    p["labeling"] = args.oracle.labeling;
    if (args.oracle.s) {
        p["s"] = *args.oracle.s;
    } else {
        p["seed"] = args.oracle.seed.value_or(0);
    }
    p["rng_seed"] = args.rng_seed;
    p["max_iter"] = args.max_iter;
    p["trials"] = args.trials;
    report.outcome["wrong"] = wrong;
    report.outcome["exhausted"] = exhausted;
    report.outcome["mean_iterations"] = static_cast<double>(total_iterations) / args.trials;
    report.outcome["max_iterations"] = max_iterations;
    report.queries["quantum_total"] = total_queries;
    report.queries["quantum_mean"] = static_cast<double>(total_queries) / args.trials;
    report.timing["seconds"] = seconds_since(start);
    report.write(*io.out, io.format);
    return exhausted > 0 ? kExitBudgetExhausted : kExitOk;
}

int run_qset(const QsetArgs& args, const Common& io) {
    RunReport report;
    report.command = "qset " + args.action;
    const auto start = Clock::now();

    if (args.action == "gen") {
        const GeneratorKind kind = parse_generator_kind(args.alg);
        const QuerySet ys = generate_query_set(kind, args.n);
        if (!args.file) {
            if (io.format == OutputFormat::kText) {
                write_query_set(*io.out, ys);
                return kExitOk;
            }
            report.outcome["elements"] = literals(ys.strings());
        } else {
            std::ofstream out(*args.file);
            if (!out) {
                throw UsageError("cannot write '" + *args.file + "'");
            }
            write_query_set(out, ys);
            report.parameters["file"] = *args.file;
        }
        report.parameters["n"] = args.n;
        report.parameters["alg"] = args.alg;
        report.outcome["size"] = ys.size();
        if (kind == GeneratorKind::kFinal) {
            report.outcome["formula_size"] = final_query_set_size(args.n);
        }
        report.timing["seconds"] = seconds_since(start);
        report.write(*io.out, io.format);
        return kExitOk;
    }

    if (args.action == "verify") {
        if (!args.file) {
            throw UsageError("qset verify needs --file");
        }
        std::ifstream in(*args.file);
        if (!in) {
            throw UsageError("cannot open '" + *args.file + "'");
        }
        const QuerySet ys = read_query_set(in);
        const int n = ys.n();
        report.parameters["file"] = *args.file;
        report.parameters["n"] = n;
        report.parameters["alg"] = std::string(to_string(ys.kind()));
        report.outcome["size"] = ys.size();

        const CoveringSet s = covering_set(ys);
        report.outcome["covering_set_size"] = s.size();
        report.add_check("n-significance", is_significance(s, n));
        report.add_check("strict-n-significance", is_strict_significance(s, n));
        if (ys.kind() == GeneratorKind::kFinal) {
            const std::size_t want = final_query_set_size(n);
            report.add_check("size-formula", ys.size() == want,
                             std::to_string(ys.size()) + " of " + std::to_string(want));
        }
        const InvariantReport inv = check_generator_invariants(ys);
        report.add_check("generator-invariants", inv.ok(),
                         std::to_string(inv.checks.size() - inv.failures()) + "/" + std::to_string(inv.checks.size()) +
                             " hold" + (inv.ok() ? "" : "; " + inv.summary()));
        bool ok = true;
        for (const auto& c : report.checks) {
            ok &= c["passed"].get<bool>();
        }
        report.outcome["verdict"] = ok ? "pass" : "fail";
        report.timing["seconds"] = seconds_since(start);
        report.write(*io.out, io.format);
        return ok ? kExitOk : kExitVerificationFailed;
    }

    if (args.action == "minimize") {
        if (args.n < 1 || args.n > kMaxExhaustiveWidth) {
            throw UsageError("qset minimize searches exhaustively and needs 1 <= n <= " +
                             std::to_string(kMaxExhaustiveWidth));
        }
        const MinQuerySetResult r = min_query_set_size(args.n);
        report.parameters["n"] = args.n;
        report.outcome["min_size"] = r.size;
        report.outcome["counting_bound"] = r.counting_bound;
        std::vector<BitString> witness;
        for (Word w : r.witness) {
            witness.emplace_back(w, args.n);
        }
        report.outcome["witness"] = literals(witness);
        report.timing["seconds"] = seconds_since(start);
        report.write(*io.out, io.format);
        return kExitOk;
    }
    throw UsageError("unknown qset action '" + args.action + "'");
}

int run_solve_classical(const SolveArgs& args, const Common& io) {
    RunReport report;
    report.command = "solve-classical";
    const auto start = Clock::now();
    SimonOracle f = build_oracle(args.oracle, report);
    const GeneratorKind kind = parse_generator_kind(args.alg);
    report.parameters["alg"] = args.alg;
    report.parameters["check_significance"] = args.check_significance;
    report.parameters["audit_promise"] = args.audit_promise;

    const QuerySet ys = generate_query_set(kind, f.n());
    const ClassicalOutcome r =
        solve_classical(f, ys, {.check_significance = args.check_significance, .audit_promise = args.audit_promise});
    if (r.one_to_one()) {
        report.outcome["verdict"] = "one-to-one";
        if (f.mode() != LabelingMode::kTable) {
            report.outcome["correct"] = f.period().is_zero();
        }
    } else {
        report.outcome["verdict"] = "period";
        record_period(report, f, *r.period);
    }
    const std::size_t budget = kind == GeneratorKind::kFinal ? final_query_set_size(f.n()) : ys.size();
    report.queries["classical"] = r.queries;
    report.queries["query_set_size"] = ys.size();
    report.queries["budget"] = budget;
    report.queries["within_budget"] = r.queries <= budget;
    report.queries["quantum"] = f.quantum_queries();
    report.timing["seconds"] = seconds_since(start);
    report.write(*io.out, io.format);
    return kExitOk;
}

int run_verify_all(const VerifyArgs& args, const Common& io) {
    RunReport report;
    report.command = "verify-all";
    const auto start = Clock::now();
    require_quantum_width(args.quantum_max_n, 2, io);
    if (args.classical_max_n < 3 || args.classical_max_n > 24) {
        throw UsageError("--classical-max-n must be in [3, 24]");
    }
    VerificationOptions opt;
    opt.quantum_max_n = args.quantum_max_n;
    opt.generator_max_n = args.classical_max_n;
    opt.solver_exhaustive_max_n = std::min(opt.solver_exhaustive_max_n, args.classical_max_n);
    opt.solver_seeded_max_n = std::min(opt.solver_seeded_max_n, args.classical_max_n);
    opt.lemma_max_n = std::min(opt.lemma_max_n, std::max(opt.lemma_min_n, args.quantum_max_n));
    opt.bounded_n = std::min(opt.bounded_n, args.quantum_max_n);
    opt.seed = args.seed;
    if (args.mutate_phase) {
        opt.phase_fn = [](int n, int l) {
            PhasePair p = phases(n, l);
            p.varphi *= 1.01;
            return p;
        };
    }
    report.parameters["quantum_max_n"] = args.quantum_max_n;
    report.parameters["classical_max_n"] = args.classical_max_n;
    report.parameters["seed"] = args.seed;
    if (args.mutate_phase) {
        report.parameters["mutate_phase"] = true;
    }

    const std::vector<CheckResult> results = run_verification(opt);
    int failed = 0, soft = 0;
    for (const CheckResult& c : results) {
        report.checks.push_back({{"name", c.name},
                                 {"passed", c.passed},
                                 {"id", c.id},
                                 {"gating", c.gating},
                                 {"anchor", c.anchor},
                                 {"detail", c.detail}});
        report.timing[c.name] = c.seconds;
        if (!c.passed) {
            (c.gating ? failed : soft)++;
        }
    }
    report.outcome["checks"] = results.size();
    report.outcome["failed"] = failed;
    report.outcome["soft_failed"] = soft;
    report.outcome["verdict"] = failed == 0 ? "pass" : "fail";
    report.timing["seconds"] = seconds_since(start);
    report.write(*io.out, io.format);
    return failed == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace exactsimon::cli
