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

#include "coinwalk/circuit.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace coinwalk {

GateKind GateKind::rz(double angle) {
    if (!std::isfinite(angle)) {
        throw ValidationError("RZ angle must be finite");
    }
    return GateKind(GateType::RZ, angle);
}

GateKind GateKind::mcx(std::size_t num_controls) {
    if (num_controls < 2) {
        throw ValidationError("MCX needs at least 2 controls (use CNOT or X)");
    }
    return GateKind(GateType::MCX, 0.0, num_controls);
}

std::size_t GateKind::arity() const {
    switch (type_) {
        case GateType::CNOT:
            return 2;
        case GateType::MCX:
            return num_controls_ + 1;
        default:
            return 1;
    }
}

std::string GateKind::name() const {
    switch (type_) {
        case GateType::H:
            return "H";
        case GateType::X:
            return "X";
        case GateType::SX:
            return "SX";
        case GateType::ID:
            return "ID";
        case GateType::RZ:
            return "RZ";
        case GateType::CNOT:
            return "CNOT";
        case GateType::MCX:
            return "MCX" + std::to_string(num_controls_);
    }
    return "?";
}

GateInstance make_h(Qubit q) { return {GateKind::h(), {q}}; }
GateInstance make_x(Qubit q) { return {GateKind::x(), {q}}; }
GateInstance make_sx(Qubit q) { return {GateKind::sx(), {q}}; }
GateInstance make_id(Qubit q) { return {GateKind::id(), {q}}; }
GateInstance make_rz(double angle, Qubit q) { return {GateKind::rz(angle), {q}}; }
GateInstance make_cnot(Qubit control, Qubit target) { return {GateKind::cnot(), {control, target}}; }

GateInstance make_mcx(std::vector<Qubit> controls, Qubit target) {
    GateKind kind = GateKind::mcx(controls.size());
    controls.push_back(target);
    return {kind, std::move(controls)};
}

void validate_gate(const GateInstance &gate, std::size_t num_qubits) {
    if (gate.operands.size() != gate.kind.arity()) {
        throw ValidationError(gate.kind.name() + " expects " + std::to_string(gate.kind.arity()) +
                              " operands, got " + std::to_string(gate.operands.size()));
    }
    std::set<Qubit> seen;
    for (Qubit q : gate.operands) {
        if (q >= num_qubits) {
            throw ValidationError(gate.kind.name() + " operand " + std::to_string(q) +
                                  " out of range for " + std::to_string(num_qubits) + " qubits");
        }
        if (!seen.insert(q).second) {
            throw ValidationError(gate.kind.name() + " has duplicate operand " + std::to_string(q));
        }
    }
}

Circuit::Circuit(std::size_t num_qubits, std::vector<Qubit> measured_qubits)
    : num_qubits_(num_qubits), measured_qubits_(std::move(measured_qubits)) {
    if (num_qubits_ < 1) {
        throw ValidationError("circuit needs at least one qubit");
    }
    std::set<Qubit> seen;
    for (Qubit q : measured_qubits_) {
        if (q >= num_qubits_) {
            throw ValidationError("measured qubit " + std::to_string(q) + " out of range");
        }
        if (!seen.insert(q).second) {
            throw ValidationError("duplicate measured qubit " + std::to_string(q));
        }
    }
}

Circuit &Circuit::append(GateInstance gate) {
    validate_gate(gate, num_qubits_);
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::append(const Circuit &fragment) {
    if (fragment.num_qubits_ > num_qubits_) {
        throw ValidationError("fragment is wider than the circuit");
    }
    for (const auto &g : fragment.gates_) {
        append(g);
    }
    return *this;
}

Census gate_census(const Circuit &circuit) {
    Census census;
    for (const auto &g : circuit.gates()) {
        ++census[g.kind.name()];
    }
    return census;
}

std::size_t census_total(const Census &census) {
    std::size_t total = 0;
    for (const auto &[_, n] : census) {
        total += n;
    }
    return total;
}

ComplexMatrix single_qubit_matrix(const GateKind &kind) {
    using namespace std::complex_literals;
    ComplexMatrix m(2, 2);
    switch (kind.type()) {
        case GateType::H: {
            const double s = 1.0 / std::numbers::sqrt2;
            m << s, s, s, -s;
            break;
        }
        case GateType::X:
            m << 0.0, 1.0, 1.0, 0.0;
            break;
        case GateType::SX:
            m << 0.5 * (1.0 + 1i), 0.5 * (1.0 - 1i), 0.5 * (1.0 - 1i), 0.5 * (1.0 + 1i);
            break;
        case GateType::ID:
            m.setIdentity();
            break;
        case GateType::RZ:
            m << std::exp(-0.5i * kind.angle()), 0.0, 0.0, std::exp(0.5i * kind.angle());
            break;
        default:
            throw ValidationError(kind.name() + " is not a single-qubit gate");
    }
    return m;
}

namespace {

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Tensor product over all qubits, qubit n-1 leftmost so that qubit 0 is the
// least-significant index bit. Qubits missing from `factors` get identity.
ComplexMatrix embed(std::size_t n, const std::map<Qubit, ComplexMatrix> &factors) {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (std::size_t k = n; k-- > 0;) {
        auto it = factors.find(k);
        out = kron(out, it == factors.end() ? ComplexMatrix::Identity(2, 2) : it->second);
    }
    return out;
}

ComplexMatrix full_gate_matrix(const GateInstance &gate, std::size_t n) {
    if (gate.kind.arity() == 1) {
        return embed(n, {{gate.operands[0], single_qubit_matrix(gate.kind)}});
    }
    // Controlled-X: I + P_controls (x) (X - I)_target.
    ComplexMatrix proj1 = ComplexMatrix::Zero(2, 2);
    proj1(1, 1) = 1.0;
    ComplexMatrix x_minus_i(2, 2);
    x_minus_i << -1.0, 1.0, 1.0, -1.0;
    std::map<Qubit, ComplexMatrix> factors;
    for (Qubit c : gate.controls()) {
        factors[c] = proj1;
    }
    factors[gate.target()] = x_minus_i;
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    return ComplexMatrix::Identity(dim, dim) + embed(n, factors);
}

}  // namespace

ComplexMatrix unitary_of(const Circuit &circuit) {
    const std::size_t n = circuit.num_qubits();
    if (n > kUnitaryQubitCap) {
        throw ValidationError("unitary_of is limited to " + std::to_string(kUnitaryQubitCap) + " qubits");
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
    for (const auto &g : circuit.gates()) {
        u = full_gate_matrix(g, n) * u;
    }
    return u;
}

double unitarity_error(const ComplexMatrix &u) {
    ComplexMatrix d = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

double phase_aligned_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ValidationError("matrix shapes differ");
    }
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    a.cwiseAbs().maxCoeff(&r, &c);
    Complex phase = 1.0;
    if (std::abs(a(r, c)) > 0.0 && std::abs(b(r, c)) > 0.0) {
        phase = b(r, c) / a(r, c);
        phase /= std::abs(phase);
    }
    return (a * phase - b).cwiseAbs().maxCoeff();
}

}  // namespace coinwalk
