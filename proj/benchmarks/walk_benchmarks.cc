// Copyright 2026 The Coinwalk Authors
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

#include "coinwalk/noise_model.h"
#include "coinwalk/simulator.h"
#include "coinwalk/transpiler.h"
#include "coinwalk/walk.h"

using namespace coinwalk;

static void BM_statevector_walk(benchmark::State &state) {
    const WalkSpec spec{.num_position_qubits = static_cast<std::size_t>(state.range(0)), .steps = 16};
    const Circuit c = walk_circuit(spec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_exact(c));
    }
}
BENCHMARK(BM_statevector_walk)->DenseRange(2, 6);

static void BM_noisy_walk_abstract(benchmark::State &state) {
    const WalkSpec spec{.num_position_qubits = 4, .steps = static_cast<std::size_t>(state.range(0))};
    const Circuit c = walk_circuit(spec);
    const NoiseModel model = default_model();
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_exact(c, model));
    }
}
BENCHMARK(BM_noisy_walk_abstract)->Arg(1)->Arg(16);

static void BM_noisy_walk_native(benchmark::State &state) {
    const WalkSpec spec{.num_position_qubits = 4, .steps = 16};
    const Circuit c = walk_circuit(spec);
    NoiseModel model = default_model();
    model.mode = NoiseMode::Native;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_exact(c, model));
    }
}
BENCHMARK(BM_noisy_walk_native);

static void BM_transpile_walk(benchmark::State &state) {
    const WalkSpec spec{.num_position_qubits = static_cast<std::size_t>(state.range(0)), .steps = 16};
    const Circuit c = walk_circuit(spec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(transpile(c));
    }
}
BENCHMARK(BM_transpile_walk)->DenseRange(2, 5);
BENCHMARK_MAIN();
