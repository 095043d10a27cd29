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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coinwalk/analysis.h"
#include "coinwalk/distribution.h"
#include "coinwalk/noise_model.h"
#include "coinwalk/walk.h"

namespace coinwalk {

/// Runs body(0) .. body(count - 1) on up to `jobs` threads.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)> &body);

/// Mixes a base seed with cell coordinates so every (strength, step, repeat)
/// cell draws from its own stream regardless of scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// Exact distribution of a freshly built `spec.steps`-step walk.
Distribution simulate_walk(const WalkSpec &spec, const std::optional<NoiseModel> &noise);

/// simulate_walk for every step count 0..spec.steps.
std::map<std::size_t, Distribution> simulate_walk_series(const WalkSpec &spec,
                                                         const std::optional<NoiseModel> &noise,
                                                         std::size_t jobs = 1);

/// Per-step fidelity of exact noisy runs against exact noiseless runs.
FidelitySeries exact_fidelity_series(const WalkSpec &spec, const NoiseModel &model,
                                     const std::map<std::size_t, Distribution> &noiseless,
                                     std::size_t jobs = 1);

struct SamplingOptions {
    std::uint64_t shots = 4096;
    std::size_t repeats = 10;
    std::uint64_t seed = 0;
};

struct SweepConfig {
    std::size_t nodes = 16;
    std::size_t max_steps = 16;
    std::vector<double> strengths;
    std::optional<SamplingOptions> sampling;  // exact mode when empty
    NoiseModel model;
    CoinInit coin_init = CoinInit::Zero;
    std::size_t jobs = 1;

    void validate() const;
};

/// 0, 0.02, 0.06, 0.1, 0.2, 0.3, ..., 1.0.
std::vector<double> default_sweep_strengths();

struct SweepRow {
    double strength = 0.0;
    std::size_t step = 0;
    double fidelity = 0.0;
    double std_error = 0.0;
};

/// Fidelity of the noisy walk against the noiseless exact walk for every
/// strength and every step 0..max_steps.
std::vector<SweepRow> run_sweep(const SweepConfig &config);

/// `strength,step,fidelity,std_error`, 6 significant digits.
std::string sweep_csv(const std::vector<SweepRow> &rows);

/// log2(nodes); throws ValidationError unless nodes is a power of two >= 2.
std::size_t position_qubits_for(std::size_t nodes);

}  // namespace coinwalk
