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
#include <span>
#include <vector>

#include "coinwalk/circuit.h"

namespace coinwalk {

/// True when every gate is one of CNOT, ID, RZ, SX, X.
bool is_native(const GateKind &kind);
bool is_native(const Circuit &circuit);

/// RZ(pi/2) SX RZ(pi/2), equal to H up to global phase.
std::vector<GateInstance> decompose_h(Qubit qubit);

/// Multi-controlled X lowered as H(target), a Gray-code controlled-Z phase
/// network, H(target). Before RZ merging the sequence holds 2^{k+1}-2 CNOTs,
/// 2^{k+1}+3 RZ and 2 SX for k controls.
std::vector<GateInstance> decompose_mcx(std::span<const Qubit> controls, Qubit target);

/// Fuses runs of RZ on the same qubit that are not separated by any other gate
/// touching that qubit. Fused rotations that vanish modulo 4*pi are dropped.
Circuit merge_rz(const Circuit &circuit);

/// Lowers to {CNOT, ID, RZ, SX, X} and runs `merge_rz` once at the end.
Circuit transpile(const Circuit &circuit);

}  // namespace coinwalk
