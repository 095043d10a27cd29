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

#include "coinwalk/walk.h"

#include <cmath>
#include <numbers>
#include <vector>

namespace coinwalk {

void WalkSpec::validate() const {
    if (num_position_qubits < 1) {
        throw ValidationError("walk needs at least one position qubit");
    }
    if (num_position_qubits >= 30) {
        throw ValidationError("position register too large");
    }
    if (use_optimized_4node && num_position_qubits != 2) {
        throw ValidationError("the optimized STEP exists only for the 4-node cycle");
    }
}

namespace {

Circuit walk_register(std::size_t n) {
    std::vector<Qubit> measured;
    for (std::size_t q = n; q-- > 0;) {
        measured.push_back(q);
    }
    return Circuit(n + 1, std::move(measured));
}

// Ripple carry for +1 on q0..q_{n-1}, every stage also controlled by the coin.
// Highest bit first so each stage still sees the original lower bits.
void append_carry_cascade(Circuit &c, std::size_t n) {
    const Qubit coin = n;
    for (std::size_t target = n; target-- > 1;) {
        std::vector<Qubit> controls{coin};
        for (Qubit q = 0; q < target; ++q) {
            controls.push_back(q);
        }
        c.append(make_mcx(std::move(controls), target));
    }
    c.append(make_cnot(coin, 0));
}

}  // namespace

Circuit increment_circuit(std::size_t n) {
    if (n < 1) {
        throw ValidationError("increment needs n >= 1");
    }
    Circuit c = walk_register(n);
    c.append(make_x(n));
    append_carry_cascade(c, n);
    c.append(make_x(n));
    return c;
}

Circuit decrement_circuit(std::size_t n) {
    if (n < 1) {
        throw ValidationError("decrement needs n >= 1");
    }
    // x - 1 = ~(~x + 1)
    Circuit c = walk_register(n);
    for (Qubit q = 0; q < n; ++q) {
        c.append(make_x(q));
    }
    append_carry_cascade(c, n);
    for (Qubit q = 0; q < n; ++q) {
        c.append(make_x(q));
    }
    return c;
}

Circuit four_node_step() {
    Circuit c = walk_register(2);
    c.append(make_cnot(0, 1));
    c.append(make_cnot(2, 1));
    c.append(make_x(0));
    return c;
}

Circuit walk_circuit(const WalkSpec &spec) {
    spec.validate();
    const std::size_t n = spec.num_position_qubits;
    const Qubit coin = spec.coin();
    Circuit c = walk_register(n);
    switch (spec.coin_init) {
        case CoinInit::Zero:
            break;
        case CoinInit::One:
            c.append(make_x(coin));
            break;
        case CoinInit::Symmetric:
            c.append(make_h(coin));
            c.append(make_rz(std::numbers::pi / 2, coin));
            break;
    }
    Circuit shift = walk_register(n);
    if (spec.use_optimized_4node) {
        shift = four_node_step();
    } else {
        shift.append(increment_circuit(n));
        shift.append(decrement_circuit(n));
    }
    for (std::size_t t = 0; t < spec.steps; ++t) {
        c.append(make_h(coin));
        c.append(shift);
    }
    return c;
}

Distribution walk_oracle(const WalkSpec &spec) {
    spec.validate();
    const std::size_t nodes = spec.num_nodes();
    if (2 * nodes > kWalkOracleMaxDim) {
        throw ValidationError("walk oracle state too large");
    }
    // amp[c][x]
    std::vector<std::vector<Complex>> amp(2, std::vector<Complex>(nodes));
    const double s = 1.0 / std::numbers::sqrt2;
    switch (spec.coin_init) {
        case CoinInit::Zero:
            amp[0][0] = 1.0;
            break;
        case CoinInit::One:
            amp[1][0] = 1.0;
            break;
        case CoinInit::Symmetric:
            amp[0][0] = s;
            amp[1][0] = Complex(0.0, s);
            break;
    }
    for (std::size_t t = 0; t < spec.steps; ++t) {
        std::vector<std::vector<Complex>> next(2, std::vector<Complex>(nodes));
        for (std::size_t x = 0; x < nodes; ++x) {
            const Complex a0 = s * (amp[0][x] + amp[1][x]);
            const Complex a1 = s * (amp[0][x] - amp[1][x]);
            next[0][(x + 1) % nodes] += a0;
            next[1][(x + nodes - 1) % nodes] += a1;
        }
        amp = std::move(next);
    }
    Distribution dist;
    for (std::size_t x = 0; x < nodes; ++x) {
        const double p = std::norm(amp[0][x]) + std::norm(amp[1][x]);
        if (p >= 1e-14) {
            dist[to_bitstring(x, spec.num_position_qubits)] = p;
        }
    }
    return dist;
}

}  // namespace coinwalk
