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

#include <json.hpp>

#include "coinwalk/circuit.h"

namespace coinwalk {

using nlohmann::json;

namespace {

json gate_to_json(const GateInstance &g) {
    json out;
    const GateType type = g.kind.type();
    out["kind"] = type == GateType::MCX ? std::string("MCX") : g.kind.name();
    if (type == GateType::RZ) {
        out["angle"] = g.kind.angle();
    }
    if (type == GateType::CNOT || type == GateType::MCX) {
        out["controls"] = std::vector<Qubit>(g.controls().begin(), g.controls().end());
    }
    out["target"] = g.target();
    return out;
}

template <typename T>
T require(const json &obj, const char *key) {
    if (!obj.contains(key)) {
        throw ValidationError(std::string("missing field '") + key + "'");
    }
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception &e) {
        throw ValidationError(std::string("bad field '") + key + "': " + e.what());
    }
}

GateInstance gate_from_json(const json &obj) {
    if (!obj.is_object()) {
        throw ValidationError("gate entry must be an object");
    }
    const auto kind = require<std::string>(obj, "kind");
    const auto target = require<Qubit>(obj, "target");
    const bool controlled = kind == "CNOT" || kind == "MCX";
    if (kind != "RZ" && obj.contains("angle")) {
        throw ValidationError("'angle' is only valid on RZ");
    }
    if (!controlled && obj.contains("controls")) {
        throw ValidationError("'controls' is only valid on CNOT and MCX");
    }
    if (kind == "H") return make_h(target);
    if (kind == "X") return make_x(target);
    if (kind == "SX") return make_sx(target);
    if (kind == "ID") return make_id(target);
    if (kind == "RZ") return make_rz(require<double>(obj, "angle"), target);
    if (controlled) {
        auto controls = require<std::vector<Qubit>>(obj, "controls");
        if (kind == "CNOT") {
            if (controls.size() != 1) {
                throw ValidationError("CNOT needs exactly one control");
            }
            return make_cnot(controls[0], target);
        }
        return make_mcx(std::move(controls), target);
    }
    throw ValidationError("unknown gate kind '" + kind + "'");
}

}  // namespace

std::string serialize(const Circuit &circuit) {
    json doc;
    doc["version"] = 1;
    doc["num_qubits"] = circuit.num_qubits();
    doc["measured_qubits"] = circuit.measured_qubits();
    json gates = json::array();
    for (const auto &g : circuit.gates()) {
        gates.push_back(gate_to_json(g));
    }
    doc["gates"] = std::move(gates);
    return doc.dump(2) + "\n";
}

Circuit deserialize(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ValidationError(std::string("malformed circuit document: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ValidationError("circuit document must be an object");
    }
    if (require<int>(doc, "version") != 1) {
        throw ValidationError("unsupported circuit version");
    }
    Circuit circuit(require<std::size_t>(doc, "num_qubits"),
                    require<std::vector<Qubit>>(doc, "measured_qubits"));
    if (!doc.contains("gates") || !doc.at("gates").is_array()) {
        throw ValidationError("'gates' must be an array");
    }
    for (const auto &g : doc.at("gates")) {
        circuit.append(gate_from_json(g));
    }
    return circuit;
}

}  // namespace coinwalk
