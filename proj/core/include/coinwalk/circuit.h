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

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "coinwalk/errors.h"

namespace coinwalk {

using Qubit = std::size_t;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

enum class GateType { H, X, SX, ID, RZ, CNOT, MCX };

/// A gate kind together with its parameters. RZ carries an angle in radians,
/// MCX carries its control count (always >= 2).
class GateKind {
  public:
    static GateKind h() { return GateKind(GateType::H); }
    static GateKind x() { return GateKind(GateType::X); }
    static GateKind sx() { return GateKind(GateType::SX); }
    static GateKind id() { return GateKind(GateType::ID); }
    static GateKind rz(double angle);
    static GateKind cnot() { return GateKind(GateType::CNOT); }
    static GateKind mcx(std::size_t num_controls);

    GateType type() const { return type_; }
    double angle() const { return angle_; }
    std::size_t num_controls() const { return num_controls_; }

    /// Number of qubits the gate acts on.
    std::size_t arity() const;

    /// Census key: "H", "X", "SX", "ID", "RZ", "CNOT", or "MCX<k>".
    std::string name() const;

    bool operator==(const GateKind &other) const = default;

  private:
    explicit GateKind(GateType type, double angle = 0.0, std::size_t num_controls = 0)
        : type_(type), angle_(angle), num_controls_(num_controls) {}

    GateType type_;
    double angle_;
    std::size_t num_controls_;
};

/// A gate applied to concrete qubits. For CNOT and MCX the operands list the
/// controls first and the target last.
struct GateInstance {
    GateKind kind;
    std::vector<Qubit> operands;

    Qubit target() const { return operands.back(); }
    std::span<const Qubit> controls() const {
        return std::span<const Qubit>(operands).first(operands.size() - 1);
    }

    bool operator==(const GateInstance &other) const = default;
};

GateInstance make_h(Qubit q);
GateInstance make_x(Qubit q);
GateInstance make_sx(Qubit q);
GateInstance make_id(Qubit q);
GateInstance make_rz(double angle, Qubit q);
GateInstance make_cnot(Qubit control, Qubit target);
GateInstance make_mcx(std::vector<Qubit> controls, Qubit target);

/// Throws ValidationError unless `gate` has the right operand count, distinct
/// operands, and every operand below `num_qubits`.
void validate_gate(const GateInstance &gate, std::size_t num_qubits);

/// Ordered gate list over a qubit register. Measurement happens implicitly at
/// the end on `measured_qubits`, rendered most-significant first.
///
/// Qubit 0 is the least-significant bit of a basis-state index.
class Circuit {
  public:
    Circuit(std::size_t num_qubits, std::vector<Qubit> measured_qubits);

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<Qubit> &measured_qubits() const { return measured_qubits_; }
    const std::vector<GateInstance> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    Circuit &append(GateInstance gate);
    Circuit &append(const Circuit &fragment);

    bool operator==(const Circuit &other) const = default;

  private:
    std::size_t num_qubits_;
    std::vector<Qubit> measured_qubits_;
    std::vector<GateInstance> gates_;
};

using Census = std::map<std::string, std::size_t>;

Census gate_census(const Circuit &circuit);
std::size_t census_total(const Census &census);

/// 2x2 matrix for a single-qubit kind. RZ(t) = diag(e^{-it/2}, e^{it/2}).
ComplexMatrix single_qubit_matrix(const GateKind &kind);

/// Dense unitary of the whole circuit built from Kronecker products of the
/// individual gates. Intended as a brute-force reference; limited to
/// `kUnitaryQubitCap` qubits.
ComplexMatrix unitary_of(const Circuit &circuit);
inline constexpr std::size_t kUnitaryQubitCap = 10;

/// max |U^dagger U - I|.
double unitarity_error(const ComplexMatrix &u);

/// Max-norm distance between `a` and `b` after aligning the global phase on
/// the largest-magnitude entry of `a`.
double phase_aligned_distance(const ComplexMatrix &a, const ComplexMatrix &b);

/// circuit/v1 document.
std::string serialize(const Circuit &circuit);
Circuit deserialize(const std::string &text);

}  // namespace coinwalk
