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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "exactsimon/classical_solver.h"
#include "exactsimon/covering_set.h"
#include "exactsimon/generator_invariants.h"
#include "exactsimon/lower_bound.h"
#include "exactsimon/query_set.h"
#include "exactsimon/simon.h"

namespace exactsimon {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Word random_nonzero(Rng& rng, int n) {
    Word w = 0;
    while (w == 0) {
        w = rng() & low_mask(n);
    }
    return w;
}

std::string sci(double v) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << v;
    return out.str();
}

// Sweep shared by the exact-correctness, amplitude-exactness and
// query-count checks.
struct ExactSweep {
    int runs = 0;
    int wrong_period = 0;
    int wrong_queries = 0;
    int violations = 0;
    double max_bad_mass = 0;
    double seconds = 0;
    std::string first_failure;
};

ExactSweep run_exact_sweep(const VerificationOptions& opt) {
    ExactSweep sweep;
    const auto start = Clock::now();
    Rng rng(opt.seed);
    auto run_one = [&](SimonOracle oracle, std::uint64_t run_seed) {
        sweep.runs++;
        const Word s = oracle.period().word();
        try {
            ExactSimonResult r = exact_simon(oracle, run_seed);
            sweep.max_bad_mass = std::max(sweep.max_bad_mass, r.max_bad_mass);
            if (r.period.word() != s) {
                sweep.wrong_period++;
                if (sweep.first_failure.empty()) {
                    sweep.first_failure = "n=" + std::to_string(oracle.n()) + " s=" + oracle.period().to_string() +
                                          " returned " + r.period.to_string();
                }
            }
            if (r.query_count != 3 * static_cast<std::uint64_t>(oracle.n()) - 3) {
                sweep.wrong_queries++;
            }
        } catch (const ExactnessViolation& e) {
            sweep.violations++;
            sweep.max_bad_mass = std::max(sweep.max_bad_mass, e.bad_mass());
            if (sweep.first_failure.empty()) {
                sweep.first_failure = "n=" + std::to_string(oracle.n()) + ": " + e.what();
            }
        }
    };
    for (int n = 2; n <= opt.quantum_max_n; n++) {
        for (Word s = 1; s < (Word{1} << n); s++) {
            run_one(SimonOracle::make_simon(n, n, BitString(s, n)), s);
        }
        for (int t = 0; t < opt.seeded_labelings; t++) {
            const Word s = random_nonzero(rng, n);
            run_one(SimonOracle::make_simon(n, n, BitString(s, n), LabelingMode::kSeeded, rng()), rng());
        }
    }
    sweep.seconds = seconds_since(start);
    return sweep;
}

CheckResult phase_condition(const VerificationOptions& opt) {
    CheckResult c;
    double worst = 0;
    int worst_n = 0, worst_l = 0;
    for (int n = 2; n <= opt.phase_max_n; n++) {
        for (int l = 1; l <= n - 1; l++) {
            const double r = phase_condition_residual(opt.phase_fn(n, l));
            if (!(r <= worst)) {
                worst = r;
                worst_n = n;
                worst_l = l;
            }
        }
    }
    double spot = 0;
    for (int n = 2; n <= opt.phase_max_n; n++) {
        const PhasePair p = opt.phase_fn(n, n - 1);
        spot = std::max({spot, std::abs(p.phi - std::numbers::pi / 2), std::abs(p.varphi - std::numbers::pi / 2)});
    }
    c.passed = worst < 1e-12 && spot < 1e-12;
    c.detail = "max residual " + sci(worst) + " at (n=" + std::to_string(worst_n) + ", l=" + std::to_string(worst_l) +
               "); max |angle - pi/2| at l=n-1 " + sci(spot);
    return c;
}

CheckResult lemma_identity(const VerificationOptions& opt) {
    CheckResult c;
    Rng rng(opt.seed ^ 0x5bd1e995);
    double worst = 0;
    int cases = 0;
    for (int n = opt.lemma_min_n; n <= opt.lemma_max_n; n++) {
        for (int t = 0; t < opt.lemma_periods; t++) {
            const BitString s(random_nonzero(rng, n), n);
            for (int rank = 0; rank <= n - 2; rank++) {
                Gf2Span span(n);
                while (span.rank() < rank) {
                    const BitString y(rng() & low_mask(n), n);
                    if (inner_product(y, s) == 0) {
                        span.insert(y);
                    }
                }
                SimonOracle oracle = SimonOracle::make_simon(n, n, s, LabelingMode::kSeeded, rng());
                QuantumState psi(n, n);
                apply_A(psi, oracle);
                QuantumState good = psi;
                QuantumState bad = psi;
                for (Word x = 0; x < (Word{1} << n); x++) {
                    auto zero_row = [](QuantumState& st, Word row) {
                        for (Amplitude& a : st.row(row)) {
                            a = 0.0;
                        }
                    };
                    zero_row(span.contains_word(x) ? good : bad, x);
                }
                const int l = rank + 1;
                const PhasePair pair = opt.phase_fn(n, l);
                const std::complex<double> e_phi = std::polar(1.0, pair.phi);
                const std::complex<double> e_varphi = std::polar(1.0, pair.varphi);
                const double p = std::ldexp(1.0, l - n);
                const std::complex<double> gx_x = e_varphi * ((1.0 - e_phi) * (1.0 - p) - 1.0);
                const std::complex<double> gx_y = e_varphi * (1.0 - e_phi) * (1.0 - p);
                const std::complex<double> gy_x = (1.0 - e_phi) * p;
                const std::complex<double> gy_y = -((1.0 - e_phi) * (1.0 - p) + e_phi);

                QuantumState q_good = good;
                apply_Q(q_good, oracle, pair, span);
                QuantumState q_bad = bad;
                apply_Q(q_bad, oracle, pair, span);
                const auto g = good.amplitudes();
                const auto b = bad.amplitudes();
                const auto qg = q_good.amplitudes();
                const auto qb = q_bad.amplitudes();
                for (std::size_t i = 0; i < g.size(); i++) {
                    worst = std::max(worst, std::abs(qg[i] - (gx_x * g[i] + gx_y * b[i])));
                    worst = std::max(worst, std::abs(qb[i] - (gy_x * g[i] + gy_y * b[i])));
                }
                cases++;
            }
        }
    }
    c.passed = worst < 1e-10;
    c.detail = std::to_string(cases) + " (n, s, Y) cases, max componentwise error " + sci(worst);
    return c;
}

CheckResult distribution_law(const VerificationOptions& opt) {
    CheckResult c;
    double worst_on = 0;
    double worst_off = 0;
    int oracles = 0;
    for (int n = 1; n <= opt.quantum_max_n; n++) {
        const double expected = std::ldexp(1.0, -(n - 1));
        for (Word s = 1; s < (Word{1} << n); s++) {
            SimonOracle oracle = SimonOracle::make_simon(n, n, BitString(s, n));
            QuantumState st(n, n);
            apply_A(st, oracle);
            const std::vector<double> dist = first_register_distribution(st);
            for (Word y = 0; y < dist.size(); y++) {
                if (parity(y & s) == 0) {
                    worst_on = std::max(worst_on, std::abs(dist[y] - expected));
                } else {
                    worst_off = std::max(worst_off, dist[y]);
                }
            }
            oracles++;
        }
    }
    c.passed = worst_on <= 1e-12 && worst_off < 1e-18;
    c.detail = std::to_string(oracles) + " oracles; max |p - 2^-(n-1)| on K^perp " + sci(worst_on) +
               ", max mass off K^perp " + sci(worst_off);
    return c;
}

CheckResult generator_sizes(const VerificationOptions& opt) {
    CheckResult c;
    const auto start = Clock::now();
    std::string failure;
    for (int n = 3; n <= opt.size_max_n; n++) {
        const std::size_t got = query_set_final(n).size();
        const std::size_t want = (std::size_t{1} << ((n + 1) / 2)) + (std::size_t{1} << (n / 2)) - 1;
        if (got != want && failure.empty()) {
            failure = "final n=" + std::to_string(n) + ": " + std::to_string(got) + " != " + std::to_string(want);
        }
    }
    for (int n = 2; n <= opt.size_max_n; n++) {
        const QuerySet ys = query_set_preliminary(n);
        std::vector<std::size_t> sizes;
        for (int k = 0; k <= n - 1; k++) {
            sizes.push_back(ys.prefix(k).size());
        }
        bool ok = sizes[0] == 2 && sizes[1] == 3;
        for (std::size_t k = 2; k < sizes.size(); k++) {
            ok &= sizes[k] == sizes[k - 1] + sizes[k - 2];
        }
        if (!ok && failure.empty()) {
            failure = "preliminary n=" + std::to_string(n) + " breaks the Fibonacci recurrence";
        }
    }
    const double secs = seconds_since(start);
    c.passed = failure.empty() && secs < opt.size_budget_seconds;
    c.detail = !failure.empty() ? failure
               : secs < opt.size_budget_seconds ? "all sizes match"
                                                : "all sizes match but the run exceeded its time budget";
    return c;
}

CheckResult strict_significance(const VerificationOptions& opt) {
    CheckResult c;
    const auto start = Clock::now();
    std::string failure;
    int sets = 0;
    for (int n = 3; n <= opt.generator_max_n; n++) {
        for (GeneratorKind kind : {GeneratorKind::kPreliminary, GeneratorKind::kFinal}) {
            const QuerySet ys = generate_query_set(kind, n);
            const int offset = kind == GeneratorKind::kPreliminary ? 1 : 2;
            for (int k = 0; k <= n - offset; k++) {
                const std::vector<Word> prefix = ys.prefix(k);
                if (!is_strict_significance(covering_set(n, prefix), k + offset) && failure.empty()) {
                    failure = std::string(to_string(kind)) + " n=" + std::to_string(n) + " Y^(" +
                              std::to_string(k) + ") is not strictly " + std::to_string(k + offset) + "-significant";
                }
                sets++;
            }
        }
    }
    const double secs = seconds_since(start);
    c.passed = failure.empty() && secs < opt.significance_budget_seconds;
    c.detail = !failure.empty() ? failure : std::to_string(sets) + " intermediate sets";
    if (failure.empty() && secs >= opt.significance_budget_seconds) {
        c.detail += ", over the time budget";
    }
    return c;
}

CheckResult loop_invariants(const VerificationOptions& opt) {
    CheckResult c;
    std::size_t checks = 0;
    std::string failure;
    for (int n = 3; n <= opt.generator_max_n; n++) {
        for (GeneratorKind kind : {GeneratorKind::kPreliminary, GeneratorKind::kFinal}) {
            const InvariantReport report = check_generator_invariants(generate_query_set(kind, n));
            checks += report.checks.size();
            if (!report.ok() && failure.empty()) {
                failure = std::string(to_string(kind)) + " n=" + std::to_string(n) + ": " + report.summary();
            }
        }
    }
    c.passed = failure.empty();
    c.detail = failure.empty() ? std::to_string(checks) + " invariant evaluations" : failure;
    return c;
}

CheckResult classical_solver(const VerificationOptions& opt) {
    CheckResult c;
    Rng rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    std::string failure;
    int runs = 0;
    auto note = [&](const std::string& what) {
        if (failure.empty()) {
            failure = what;
        }
    };
    auto solve_one = [&](SimonOracle oracle, const QuerySet& ys) {
        const std::size_t budget = final_query_set_size(oracle.n());
        const ClassicalOutcome out = solve_classical(oracle, ys);
        runs++;
        if (!out.period || *out.period != oracle.period()) {
            note("n=" + std::to_string(oracle.n()) + " s=" + oracle.period().to_string() + " not recovered");
        }
        if (out.queries > budget) {
            note("n=" + std::to_string(oracle.n()) + " used " + std::to_string(out.queries) + " queries");
        }
    };
    for (int n = 3; n <= opt.solver_exhaustive_max_n; n++) {
        const QuerySet ys = query_set_final(n);
        for (Word s = 1; s < (Word{1} << n); s++) {
            solve_one(SimonOracle::make_simon(n, n, BitString(s, n)), ys);
        }
    }
    for (int n = opt.solver_exhaustive_max_n + 1; n <= opt.solver_seeded_max_n; n++) {
        const QuerySet ys = query_set_final(n);
        for (int t = 0; t < opt.solver_seeded_trials; t++) {
            const BitString s(random_nonzero(rng, n), n);
            solve_one(SimonOracle::make_simon(n, n, s, LabelingMode::kSeeded, rng()), ys);
        }
    }
    for (int n = 3; n <= opt.solver_seeded_max_n; n++) {
        const QuerySet ys = query_set_final(n);
        for (int t = 0; t < 3; t++) {
            SimonOracle oracle =
                t == 0 ? SimonOracle::make_injective(n, n) : SimonOracle::make_injective(n, n, rng());
            const ClassicalOutcome out = solve_classical(oracle, ys);
            runs++;
            if (!out.one_to_one() || out.queries != ys.size()) {
                note("injective n=" + std::to_string(n) + " did not yield the one-to-one verdict after |Y| queries");
            }
        }
    }
    c.passed = failure.empty();
    c.detail = failure.empty() ? std::to_string(runs) + " solver runs" : failure;
    return c;
}

CheckResult lower_bound_oracle() {
    CheckResult c;
    const MinQuerySetResult two = min_query_set_size(2);
    const MinQuerySetResult three = min_query_set_size(3);
    auto bound_ok = [](const MinQuerySetResult& r) {
        const std::uint64_t k = static_cast<std::uint64_t>(r.size);
        return k * (k - 1) / 2 + 1 >= (std::uint64_t{1} << r.n);
    };
    auto witness_ok = [](const MinQuerySetResult& r) {
        return static_cast<int>(r.witness.size()) == r.size && is_significance(covering_set(r.n, r.witness), r.n);
    };
    c.passed = two.exact && three.exact && two.size == 3 && three.size == 5 &&
               static_cast<std::size_t>(three.size) == query_set_final(3).size() && bound_ok(two) &&
               bound_ok(three) && witness_ok(two) && witness_ok(three);
    c.detail = "min(2)=" + std::to_string(two.size) + ", min(3)=" + std::to_string(three.size) +
               ", |final(3)|=" + std::to_string(query_set_final(3).size());
    return c;
}

CheckResult bounded_error(const VerificationOptions& opt) {
    CheckResult c;
    c.gating = false;
    Rng rng(opt.seed ^ 0xc2b2ae3d27d4eb4fULL);
    const int n = opt.bounded_n;
    long total = 0;
    int wrong = 0;
    int exhausted = 0;
    for (int t = 0; t < opt.bounded_trials; t++) {
        const BitString s(random_nonzero(rng, n), n);
        SimonOracle oracle = SimonOracle::make_simon(n, n, s);
        try {
            const BoundedSimonResult r = simon_bounded(oracle, rng(), 1000);
            total += r.iterations;
            wrong += r.period != s;
        } catch (const IterationBudgetExhausted&) {
            exhausted++;
        }
    }
    const double mean = static_cast<double>(total) / std::max(1, opt.bounded_trials - exhausted);
    c.passed = wrong == 0 && exhausted == 0 && mean <= 3.0 * (n - 1);
    std::ostringstream d;
    d << opt.bounded_trials << " trials at n=" << n << ", mean iterations " << mean << " (limit " << 3 * (n - 1)
      << "), wrong " << wrong << ", exhausted " << exhausted;
    c.detail = d.str();
    return c;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerificationOptions& options,
                                          const std::function<void(const CheckResult&)>& on_result) {
    std::vector<CheckResult> results;
    auto emit = [&](int id, std::string name, std::string anchor, CheckResult c, double secs) {
        c.id = id;
        c.name = std::move(name);
        c.anchor = std::move(anchor);
        c.seconds = secs;
        if (on_result) {
            on_result(c);
        }
        results.push_back(std::move(c));
    };
    auto timed = [&](int id, std::string name, std::string anchor, const std::function<CheckResult()>& fn) {
        const auto start = Clock::now();
        CheckResult c = fn();
        emit(id, std::move(name), std::move(anchor), std::move(c), seconds_since(start));
    };

    const ExactSweep sweep = run_exact_sweep(options);
    {
        CheckResult c;
        c.passed = sweep.wrong_period == 0 && sweep.violations == 0 && sweep.runs > 0 &&
                   sweep.seconds < options.exact_budget_seconds;
        c.detail = std::to_string(sweep.runs) + " runs, " + std::to_string(sweep.wrong_period) + " wrong, " +
                   std::to_string(sweep.violations) + " exactness violations" +
                   (sweep.seconds < options.exact_budget_seconds ? "" : ", over the time budget") +
                   (sweep.first_failure.empty() ? "" : "; first failure: " + sweep.first_failure);
        emit(1, "exact-correctness", "exact quantum algorithm theorem", c, sweep.seconds);
    }
    {
        CheckResult c;
        c.passed = sweep.violations == 0 && sweep.max_bad_mass < kZeroMassTolerance;
        c.detail = "max mass on <Y> after Q " + sci(sweep.max_bad_mass) + " (limit 1e-18)";
        emit(2, "amplitude-exactness", "bad-subspace elimination", c, 0);
    }
    {
        CheckResult c;
        c.passed = sweep.wrong_queries == 0 && sweep.violations == 0;
        c.detail = std::to_string(sweep.runs - sweep.wrong_queries) + "/" + std::to_string(sweep.runs) +
                   " runs used exactly 3n-3 oracle applications";
        emit(3, "query-count", "3n-3 query count", c, 0);
    }
    timed(4, "phase-condition", "phase condition and closed-form angles", [&] { return phase_condition(options); });
    timed(5, "operator-lemma", "amplification operator lemma", [&] { return lemma_identity(options); });
    timed(6, "distribution-law", "|K^perp, f(T)> state", [&] { return distribution_law(options); });
    timed(7, "generator-sizes", "query-set cardinality theorem", [&] { return generator_sizes(options); });
    timed(8, "strict-significance", "strict significance corollaries",
          [&] { return strict_significance(options); });
    timed(9, "loop-invariants", "generator loop invariants and covering lemmas",
          [&] { return loop_invariants(options); });
    timed(10, "classical-solver", "deterministic O(sqrt(2^n)) theorem", [&] { return classical_solver(options); });
    timed(11, "lower-bound-oracle", "covering-set counting bound", [] { return lower_bound_oracle(); });
    timed(12, "bounded-error", "expected O(n) bounded-error behaviour", [&] { return bounded_error(options); });
    return results;
}

bool all_gating_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.passed || !c.gating; });
}

}  // namespace exactsimon
