// Copyright 2026 The tsynth Authors
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

#include <random>

#include "benchmark/benchmark.h"
#include "tsynth/search.h"
#include "tsynth/unitary_library.h"

using namespace tsynth;

namespace {

/// A target that passes at no level, so every sequence is visited.
DenseUnitary unreachable(int n) {
    DenseUnitary u = DenseUnitary::identity(n);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> angle(0, 6.283185307179586);
    for (size_t k = 0; k < u.dim(); k++) {
        u(k, k) = std::polar(1.0, angle(rng));
    }
    return qft(n) * u;
}

void run(benchmark::State &state, bool parallel, int n, int m) {
    DenseUnitary w = unreachable(n);
    SearchConfig cfg = SearchConfig::standard(SearchMode::Count, n, 1e-3);
    cfg.thread_count = static_cast<int>(state.range(0));
    uint64_t leaves = 0;
    for (auto _ : state) {
        DecideStats stats;
        auto hit = parallel ? decide_parallel(w, m, cfg, &stats) : decide_serial(w, m, cfg, &stats);
        benchmark::DoNotOptimize(hit);
        leaves += stats.leaves;
    }
    state.counters["leaves/s"] = benchmark::Counter(static_cast<double>(leaves), benchmark::Counter::kIsRate);
}

void BM_decide_serial_2q_m3(benchmark::State &state) { run(state, false, 2, 3); }
void BM_decide_parallel_2q_m3(benchmark::State &state) { run(state, true, 2, 3); }
void BM_decide_serial_3q_m2(benchmark::State &state) { run(state, false, 3, 2); }
void BM_decide_parallel_3q_m2(benchmark::State &state) { run(state, true, 3, 2); }

}  // namespace

BENCHMARK(BM_decide_serial_2q_m3)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_decide_parallel_2q_m3)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_decide_serial_3q_m2)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_decide_parallel_3q_m2)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
