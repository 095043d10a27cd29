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

#include "coinwalk/circuit.h"
#include "coinwalk/distribution.h"

namespace coinwalk {

enum class CoinInit {
    Zero,
    One,
    Symmetric,  // (|0> + i|1>) / sqrt(2)
};

/// A coined walk on a cycle of 2^num_position_qubits nodes. The coin is the
/// qubit right above the position register (index num_position_qubits).
struct WalkSpec {
    std::size_t num_position_qubits = 3;
    std::size_t steps = 0;
    CoinInit coin_init = CoinInit::Zero;
    bool use_optimized_4node = false;

    std::size_t num_nodes() const { return std::size_t{1} << num_position_qubits; }
    std::size_t num_qubits() const { return num_position_qubits + 1; }
    Qubit coin() const { return num_position_qubits; }

    void validate() const;
};

/// Coin-conditional +1 (mod 2^n), active when the coin is |0>.
Circuit increment_circuit(std::size_t n);

/// Coin-conditional -1 (mod 2^n), active when the coin is |1>.
Circuit decrement_circuit(std::size_t n);

/// Combined shift for the 4-node cycle: CNOT(q0 -> q1), CNOT(coin -> q1), X(q0).
Circuit four_node_step();

Circuit walk_circuit(const WalkSpec &spec);

/// Applies the Hadamard coin and the cycle shift directly on the (node, coin)
/// amplitude table, without going through the circuit IR. Returns the node
/// distribution keyed by position bitstrings, MSB first.
Distribution walk_oracle(const WalkSpec &spec);

inline constexpr std::size_t kWalkOracleMaxDim = std::size_t{1} << 20;

}  // namespace coinwalk
