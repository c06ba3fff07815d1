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

#include <benchmark/benchmark.h>

#include <random>

#include "exactsimon/classical_solver.h"
#include "exactsimon/covering_set.h"
#include "exactsimon/gf2_span.h"
#include "exactsimon/simon.h"

using namespace exactsimon;

static void BM_hadamard_first(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    QuantumState st(n, n);
    for (auto _ : state) {
        hadamard_first(st);
        benchmark::DoNotOptimize(st.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(st.size()));
}
BENCHMARK(BM_hadamard_first)->DenseRange(4, 12, 2);

static void BM_exact_simon(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const BitString s(low_mask(n) >> 1 | 1, n);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        SimonOracle f = SimonOracle::make_simon(n, n, s, LabelingMode::kSeeded, seed);
        benchmark::DoNotOptimize(exact_simon(f, seed++));
    }
}
BENCHMARK(BM_exact_simon)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_query_set_final_covering(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const QuerySet ys = query_set_final(n);
        benchmark::DoNotOptimize(is_strict_significance(covering_set(ys), n));
    }
}
BENCHMARK(BM_query_set_final_covering)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_solve_classical(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QuerySet ys = query_set_final(n);
    std::mt19937_64 rng(1);
    for (auto _ : state) {
        const Word s = 1 + rng() % low_mask(n);
        SimonOracle f = SimonOracle::make_simon(n, n, BitString(s, n), LabelingMode::kSeeded, s);
        benchmark::DoNotOptimize(solve_classical(f, ys));
    }
}
BENCHMARK(BM_solve_classical)->DenseRange(8, 20, 4);

static void BM_span_insert(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(2);
    for (auto _ : state) {
        Gf2Span span(n);
        while (span.rank() < n - 1) {
            span.insert(BitString(rng() & low_mask(n), n));
        }
        benchmark::DoNotOptimize(span.pick_nonzero_perp());
    }
}
BENCHMARK(BM_span_insert)->Arg(8)->Arg(16)->Arg(30);

BENCHMARK_MAIN();
