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

#include "coinwalk/circuit.h"

namespace coinwalk {

enum class NoiseMode {
    Abstract,  // noise attached to the gates as written
    Native,    // circuit lowered to native gates first, then 1q/2q noise
};

/// Per-arity-class depolarizing parameters and a global strength multiplier.
struct NoiseModel {
    double lambda_1q = 0.0;
    double lambda_2q = 0.0;
    double lambda_3q = 0.0;
    double lambda_multi = 0.0;
    double strength = 1.0;
    NoiseMode mode = NoiseMode::Abstract;

    void validate() const;

    bool operator==(const NoiseModel &other) const = default;
};

/// Upper bound 4^k / (4^k - 1) on the depolarizing parameter of a k-qubit channel.
double depolarizing_bound(std::size_t num_qubits);

/// The full-strength error rates: 0.005 / 0.02 / 0.04 / 0.6.
NoiseModel default_model();

/// Copy of `model` with `strength` replaced.
NoiseModel scaled(const NoiseModel &model, double strength);

/// Effective parameter for `gate`, by operand count: 1, 2, 3, or 4+ qubits.
double lambda_for(const NoiseModel &model, const GateInstance &gate);

/// All-zero model at full strength.
NoiseModel zero_model();

std::string to_string(NoiseMode mode);
NoiseMode parse_noise_mode(const std::string &text);

/// noise/v1 document.
std::string serialize(const NoiseModel &model);
NoiseModel deserialize_noise_model(const std::string &text);

}  // namespace coinwalk
