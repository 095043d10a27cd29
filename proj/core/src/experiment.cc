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

#include "coinwalk/experiment.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "coinwalk/simulator.h"

namespace coinwalk {

void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)> &body) {
    jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> workers;
        for (std::size_t w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error = std::current_exception();
                    }
                }
            });
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
    auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
    std::seed_seq seq{lo(seed), hi(seed), lo(a), hi(a), lo(b), hi(b), lo(c), hi(c)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

std::size_t position_qubits_for(std::size_t nodes) {
    if (nodes < 2 || (nodes & (nodes - 1)) != 0) {
        throw ValidationError("node count " + std::to_string(nodes) + " is not a power of two >= 2");
    }
    return static_cast<std::size_t>(std::countr_zero(nodes));
}

Distribution simulate_walk(const WalkSpec &spec, const std::optional<NoiseModel> &noise) {
    return run_exact(walk_circuit(spec), noise);
}

std::map<std::size_t, Distribution> simulate_walk_series(const WalkSpec &spec,
                                                         const std::optional<NoiseModel> &noise,
                                                         std::size_t jobs) {
    spec.validate();
    std::vector<Distribution> results(spec.steps + 1);
    parallel_for(results.size(), jobs, [&](std::size_t t) {
        WalkSpec fresh = spec;
        fresh.steps = t;
        results[t] = simulate_walk(fresh, noise);
    });
    std::map<std::size_t, Distribution> series;
    for (std::size_t t = 0; t < results.size(); ++t) {
        series.emplace(t, std::move(results[t]));
    }
    return series;
}

FidelitySeries exact_fidelity_series(const WalkSpec &spec, const NoiseModel &model,
                                     const std::map<std::size_t, Distribution> &noiseless, std::size_t jobs) {
    std::map<std::size_t, std::vector<Distribution>> candidate;
    for (auto &[t, d] : simulate_walk_series(spec, model, jobs)) {
        candidate[t].push_back(std::move(d));
    }
    return fidelity_series(noiseless, candidate);
}

void SweepConfig::validate() const {
    position_qubits_for(nodes);
    if (strengths.empty()) {
        throw ValidationError("sweep needs at least one strength");
    }
    for (std::size_t i = 0; i < strengths.size(); ++i) {
        if (!(strengths[i] >= 0.0 && strengths[i] <= 1.0)) {
            throw ValidationError("strength " + std::to_string(strengths[i]) + " outside [0, 1]");
        }
        if (i > 0 && !(strengths[i - 1] < strengths[i])) {
            throw ValidationError("strengths must be distinct and ascending");
        }
    }
    if (sampling && (sampling->shots < 1 || sampling->repeats < 1)) {
        throw ValidationError("sampling needs shots >= 1 and repeats >= 1");
    }
    model.validate();
}

std::vector<double> default_sweep_strengths() {
    std::vector<double> s{0.0, 0.02, 0.06};
    for (int tenth = 1; tenth <= 10; ++tenth) {
        s.push_back(tenth / 10.0);
    }
    return s;
}

std::vector<SweepRow> run_sweep(const SweepConfig &config) {
    config.validate();
    WalkSpec base;
    base.num_position_qubits = position_qubits_for(config.nodes);
    base.steps = config.max_steps;
    base.coin_init = config.coin_init;

    const auto noiseless = simulate_walk_series(base, std::nullopt, config.jobs);
    const std::size_t steps = config.max_steps + 1;
    std::vector<SweepRow> rows(config.strengths.size() * steps);

    parallel_for(rows.size(), config.jobs, [&](std::size_t cell) {
        const std::size_t si = cell / steps;
        const std::size_t t = cell % steps;
        WalkSpec spec = base;
        spec.steps = t;
        const double strength = config.strengths[si];
        const Distribution noisy = simulate_walk(spec, scaled(config.model, strength));

        std::vector<Distribution> repeats;
        if (config.sampling) {
            for (std::size_t r = 0; r < config.sampling->repeats; ++r) {
                const auto seed = derive_seed(config.sampling->seed, si, t, r);
                repeats.push_back(normalize_counts(sample_counts(noisy, config.sampling->shots, seed)));
            }
        } else {
            repeats.push_back(noisy);
        }
        const auto point = fidelity_series({{t, noiseless.at(t)}}, {{t, std::move(repeats)}}).front();
        rows[cell] = SweepRow{strength, t, point.fidelity_mean, point.std_error};
    });
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow> &rows) {
    std::string out = "strength,step,fidelity,std_error\n";
    for (const auto &r : rows) {
        out += format_6g(r.strength) + "," + std::to_string(r.step) + "," + format_6g(r.fidelity) + "," +
               format_6g(r.std_error) + "\n";
    }
    return out;
}

}  // namespace coinwalk
