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

#include "coinwalk/noise_model.h"

#include <cmath>

#include <json.hpp>

namespace coinwalk {

using nlohmann::json;

double depolarizing_bound(std::size_t num_qubits) {
    if (num_qubits == 0) {
        throw ValidationError("depolarizing channel needs at least one qubit");
    }
    const double d2 = std::pow(4.0, static_cast<double>(num_qubits));
    return d2 / (d2 - 1.0);
}

void NoiseModel::validate() const {
    auto check = [](const char *name, double value, std::size_t arity) {
        if (!(value >= 0.0 && value <= depolarizing_bound(arity))) {
            throw ValidationError(std::string(name) + " = " + std::to_string(value) + " outside [0, " +
                                  std::to_string(depolarizing_bound(arity)) + "]");
        }
    };
    check("lambda_1q", lambda_1q, 1);
    check("lambda_2q", lambda_2q, 2);
    check("lambda_3q", lambda_3q, 3);
    // 4 qubits gives the tightest bound of the multi-qubit class.
    check("lambda_multi", lambda_multi, 4);
    if (!(strength >= 0.0 && strength <= 1.0)) {
        throw ValidationError("strength must lie in [0, 1]");
    }
}

NoiseModel default_model() {
    return NoiseModel{
        .lambda_1q = 0.005,
        .lambda_2q = 0.02,
        .lambda_3q = 0.04,
        .lambda_multi = 0.6,
        .strength = 1.0,
        .mode = NoiseMode::Abstract,
    };
}

NoiseModel zero_model() { return NoiseModel{}; }

NoiseModel scaled(const NoiseModel &model, double strength) {
    if (!(strength >= 0.0 && strength <= 1.0)) {
        throw ValidationError("strength must lie in [0, 1]");
    }
    NoiseModel out = model;
    out.strength = strength;
    return out;
}

double lambda_for(const NoiseModel &model, const GateInstance &gate) {
    double base = 0.0;
    switch (gate.operands.size()) {
        case 1:
            base = model.lambda_1q;
            break;
        case 2:
            base = model.lambda_2q;
            break;
        case 3:
            base = model.lambda_3q;
            break;
        default:
            base = model.lambda_multi;
    }
    return model.strength * base;
}

std::string to_string(NoiseMode mode) { return mode == NoiseMode::Abstract ? "abstract" : "native"; }

NoiseMode parse_noise_mode(const std::string &text) {
    if (text == "abstract") return NoiseMode::Abstract;
    if (text == "native") return NoiseMode::Native;
    throw ValidationError("unknown noise mode '" + text + "'");
}

std::string serialize(const NoiseModel &model) {
    json doc;
    doc["format"] = "noise/v1";
    doc["lambda_1q"] = model.lambda_1q;
    doc["lambda_2q"] = model.lambda_2q;
    doc["lambda_3q"] = model.lambda_3q;
    doc["lambda_multi"] = model.lambda_multi;
    doc["strength"] = model.strength;
    doc["mode"] = to_string(model.mode);
    return doc.dump(2) + "\n";
}

NoiseModel deserialize_noise_model(const std::string &text) {
    NoiseModel model;
    try {
        const json doc = json::parse(text);
        if (doc.at("format").get<std::string>() != "noise/v1") {
            throw ValidationError("expected format noise/v1");
        }
        model.lambda_1q = doc.at("lambda_1q").get<double>();
        model.lambda_2q = doc.at("lambda_2q").get<double>();
        model.lambda_3q = doc.at("lambda_3q").get<double>();
        model.lambda_multi = doc.at("lambda_multi").get<double>();
        model.strength = doc.at("strength").get<double>();
        model.mode = parse_noise_mode(doc.at("mode").get<std::string>());
    } catch (const json::exception &e) {
        throw ValidationError(std::string("malformed noise model: ") + e.what());
    }
    model.validate();
    return model;
}

}  // namespace coinwalk
