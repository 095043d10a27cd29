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
#include <string>
#include <vector>

#include "coinwalk/analysis.h"
#include "coinwalk/noise_model.h"
#include "coinwalk/walk.h"

namespace coinwalk {

/// Candidate values per parameter; the search visits the cartesian product.
struct CalibrationGrid {
    std::vector<double> lambda_1q{0.0};
    std::vector<double> lambda_2q{0.0};
    std::vector<double> lambda_3q{0.0};
    std::vector<double> lambda_multi{0.0};
    std::vector<double> strengths{1.0};
    NoiseMode mode = NoiseMode::Abstract;

    std::size_t size() const;

    /// Candidates in lexicographic order of (lambda_1q, lambda_2q, lambda_3q,
    /// lambda_multi, strength), each axis sorted ascending.
    std::vector<NoiseModel> candidates() const;

    /// Parses `l1=...;l2=...;l3=...;lm=...;s=...` where each value is either a
    /// comma list or `lo:hi:points`. Omitted axes keep their defaults.
    static CalibrationGrid parse(const std::string &text);
};

std::vector<double> linspace(double lo, double hi, std::size_t points);

struct CalibrationResult {
    NoiseModel model;
    double mse = 0.0;
    std::size_t evaluated = 0;
};

/// Mean squared difference between `simulated` and `reference` fidelities.
double fidelity_mse(const FidelitySeries &reference, const FidelitySeries &simulated);

/// Exhaustive grid search for the model whose simulated per-step fidelity
/// (against the noiseless walk) best matches `reference`. Exact ties go to the
/// lexicographically smallest candidate.
CalibrationResult calibrate(const FidelitySeries &reference, const WalkSpec &walk,
                            const CalibrationGrid &grid, std::size_t jobs = 1);

}  // namespace coinwalk
