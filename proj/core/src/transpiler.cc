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

#include "coinwalk/transpiler.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <optional>

namespace coinwalk {

bool is_native(const GateKind &kind) {
    switch (kind.type()) {
        case GateType::CNOT:
        case GateType::ID:
        case GateType::RZ:
        case GateType::SX:
        case GateType::X:
            return true;
        default:
            return false;
    }
}

bool is_native(const Circuit &circuit) {
    for (const auto &g : circuit.gates()) {
        if (!is_native(g.kind)) {
            return false;
        }
    }
    return true;
}

std::vector<GateInstance> decompose_h(Qubit qubit) {
    const double half_pi = std::numbers::pi / 2;
    return {make_rz(half_pi, qubit), make_sx(qubit), make_rz(half_pi, qubit)};
}

namespace {

// exp(i*pi*x_0*...*x_{m-1}) expands into parity phases over every non-empty
// subset S of the m qubits with angle (-1)^{|S|+1} pi / 2^{m-1}. Subsets are
// grouped by their highest member ("lead"); the lead accumulates the parity
// of the lower members along a reflected Gray code, one CNOT per code step
// plus one to uncompute.
void append_gray_code_phase(std::vector<GateInstance> &out, const std::vector<Qubit> &qubits) {
    const std::size_t m = qubits.size();
    const double unit = std::numbers::pi / static_cast<double>(std::size_t{1} << (m - 1));
    for (std::size_t lead = 0; lead < m; ++lead) {
        const std::size_t codes = std::size_t{1} << lead;
        std::size_t prev = 0;
        for (std::size_t i = 0; i < codes; ++i) {
            const std::size_t gray = i ^ (i >> 1);
            if (i > 0) {
                const auto flipped = static_cast<std::size_t>(std::countr_zero(gray ^ prev));
                out.push_back(make_cnot(qubits[flipped], qubits[lead]));
            }
            const int subset_size = std::popcount(gray) + 1;
            out.push_back(make_rz(subset_size % 2 == 1 ? unit : -unit, qubits[lead]));
            prev = gray;
        }
        if (lead > 0) {
            const auto flipped = static_cast<std::size_t>(std::countr_zero(prev));
            out.push_back(make_cnot(qubits[flipped], qubits[lead]));
        }
    }
}

}  // namespace

std::vector<GateInstance> decompose_mcx(std::span<const Qubit> controls, Qubit target) {
    if (controls.size() < 2) {
        throw ValidationError("decompose_mcx needs at least 2 controls");
    }
    // The target goes first so its lone rotation sits next to the leading H.
    std::vector<Qubit> qubits{target};
    qubits.insert(qubits.end(), controls.begin(), controls.end());
    validate_gate(make_mcx(std::vector<Qubit>(controls.begin(), controls.end()), target),
                  *std::max_element(qubits.begin(), qubits.end()) + 1);

    std::vector<GateInstance> out = decompose_h(target);
    append_gray_code_phase(out, qubits);
    for (auto &g : decompose_h(target)) {
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

bool vanishes_mod_4pi(double angle) {
    const double period = 4 * std::numbers::pi;
    const double r = std::remainder(angle, period);
    return std::abs(r) <= 1e-12;
}

}  // namespace

Circuit merge_rz(const Circuit &circuit) {
    const std::size_t n = circuit.num_qubits();
    // pending[q] holds an accumulated rotation not yet emitted on qubit q.
    std::vector<std::optional<double>> pending(n);
    Circuit out(n, circuit.measured_qubits());
    auto flush = [&](Qubit q) {
        if (pending[q] && !vanishes_mod_4pi(*pending[q])) {
            out.append(make_rz(*pending[q], q));
        }
        pending[q].reset();
    };
    for (const auto &g : circuit.gates()) {
        if (g.kind.type() == GateType::RZ) {
            const Qubit q = g.target();
            pending[q] = pending[q].value_or(0.0) + g.kind.angle();
            continue;
        }
        for (Qubit q : g.operands) {
            flush(q);
        }
        out.append(g);
    }
    for (Qubit q = 0; q < n; ++q) {
        flush(q);
    }
    return out;
}

Circuit transpile(const Circuit &circuit) {
    Circuit lowered(circuit.num_qubits(), circuit.measured_qubits());
    for (const auto &g : circuit.gates()) {
        switch (g.kind.type()) {
            case GateType::H:
                for (auto &h : decompose_h(g.target())) {
                    lowered.append(std::move(h));
                }
                break;
            case GateType::MCX:
                for (auto &part : decompose_mcx(g.controls(), g.target())) {
                    lowered.append(std::move(part));
                }
                break;
            default:
                lowered.append(g);
        }
    }
    return merge_rz(lowered);
}

}  // namespace coinwalk
