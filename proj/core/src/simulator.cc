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

#include "coinwalk/simulator.h"

#include <algorithm>
#include <random>
#include <vector>

#include "coinwalk/transpiler.h"

namespace coinwalk {

namespace {

using Index = Eigen::Index;

Index bit(Qubit q) { return Index{1} << q; }

Index control_mask(const GateInstance &g) {
    Index mask = 0;
    for (Qubit c : g.controls()) {
        mask |= bit(c);
    }
    return mask;
}

bool is_controlled_x(const GateInstance &g) {
    return g.kind.type() == GateType::CNOT || g.kind.type() == GateType::MCX;
}

// Calls f(i) for every basis index whose controls are all set and whose
// target bit is clear; the partner index is i | target bit.
template <typename F>
void for_each_controlled_pair(Index dim, const GateInstance &g, F &&f) {
    const Index controls = control_mask(g);
    const Index tbit = bit(g.target());
    for (Index i = 0; i < dim; ++i) {
        if ((i & tbit) == 0 && (i & controls) == controls) {
            f(i, i | tbit);
        }
    }
}

template <typename F>
void for_each_pair(Index dim, Qubit q, F &&f) {
    const Index qbit = bit(q);
    for (Index i = 0; i < dim; ++i) {
        if ((i & qbit) == 0) {
            f(i, i | qbit);
        }
    }
}

void check_gate(const GateInstance &gate, std::size_t num_qubits) { validate_gate(gate, num_qubits); }

}  // namespace

Statevector::Statevector(std::size_t num_qubits)
    : num_qubits_(num_qubits), amplitudes_(ComplexVector::Zero(bit(num_qubits))) {
    amplitudes_(0) = 1.0;
}

Statevector::Statevector(ComplexVector amplitudes) : num_qubits_(0), amplitudes_(std::move(amplitudes)) {
    const Index dim = amplitudes_.size();
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw ValidationError("statevector length must be a power of two >= 2");
    }
    while (bit(num_qubits_) < dim) {
        ++num_qubits_;
    }
}

void Statevector::apply(const GateInstance &gate) {
    check_gate(gate, num_qubits_);
    auto &a = amplitudes_;
    if (is_controlled_x(gate)) {
        for_each_controlled_pair(a.size(), gate, [&](Index i, Index j) { std::swap(a(i), a(j)); });
        return;
    }
    const ComplexMatrix u = single_qubit_matrix(gate.kind);
    for_each_pair(a.size(), gate.target(), [&](Index i, Index j) {
        const Complex a0 = a(i);
        const Complex a1 = a(j);
        a(i) = u(0, 0) * a0 + u(0, 1) * a1;
        a(j) = u(1, 0) * a0 + u(1, 1) * a1;
    });
}

Eigen::VectorXd Statevector::probabilities() const { return amplitudes_.cwiseAbs2(); }

DensityMatrix::DensityMatrix(std::size_t num_qubits)
    : num_qubits_(num_qubits), entries_(ComplexMatrix::Zero(bit(num_qubits), bit(num_qubits))) {
    entries_(0, 0) = 1.0;
}

DensityMatrix::DensityMatrix(ComplexMatrix entries) : num_qubits_(0), entries_(std::move(entries)) {
    const Index dim = entries_.rows();
    if (dim != entries_.cols() || dim < 2 || (dim & (dim - 1)) != 0) {
        throw ValidationError("density matrix must be square with power-of-two dimension >= 2");
    }
    while (bit(num_qubits_) < dim) {
        ++num_qubits_;
    }
}

DensityMatrix DensityMatrix::from_statevector(const Statevector &psi) {
    const auto &a = psi.amplitudes();
    return DensityMatrix(ComplexMatrix(a * a.adjoint()));
}

void DensityMatrix::apply(const GateInstance &gate) {
    check_gate(gate, num_qubits_);
    auto &rho = entries_;
    const Index dim = rho.rows();
    if (is_controlled_x(gate)) {
        for_each_controlled_pair(dim, gate, [&](Index i, Index j) { rho.row(i).swap(rho.row(j)); });
        for_each_controlled_pair(dim, gate, [&](Index i, Index j) { rho.col(i).swap(rho.col(j)); });
        return;
    }
    const ComplexMatrix u = single_qubit_matrix(gate.kind);
    // rho <- U rho, then rho <- rho U^dagger.
    for_each_pair(dim, gate.target(), [&](Index i, Index j) {
        const Eigen::RowVectorXcd r0 = rho.row(i);
        const Eigen::RowVectorXcd r1 = rho.row(j);
        rho.row(i) = u(0, 0) * r0 + u(0, 1) * r1;
        rho.row(j) = u(1, 0) * r0 + u(1, 1) * r1;
    });
    for_each_pair(dim, gate.target(), [&](Index i, Index j) {
        const ComplexVector c0 = rho.col(i);
        const ComplexVector c1 = rho.col(j);
        rho.col(i) = std::conj(u(0, 0)) * c0 + std::conj(u(0, 1)) * c1;
        rho.col(j) = std::conj(u(1, 0)) * c0 + std::conj(u(1, 1)) * c1;
    });
}

void DensityMatrix::apply_depolarizing(std::span<const Qubit> qubits, double lambda) {
    if (qubits.empty()) {
        throw ValidationError("depolarizing channel needs at least one qubit");
    }
    Index qmask = 0;
    for (Qubit q : qubits) {
        if (q >= num_qubits_) {
            throw ValidationError("depolarizing qubit out of range");
        }
        if (qmask & bit(q)) {
            throw ValidationError("duplicate depolarizing qubit");
        }
        qmask |= bit(q);
    }
    const double bound = depolarizing_bound(qubits.size());
    if (!(lambda >= 0.0 && lambda <= bound)) {
        throw ValidationError("depolarizing parameter " + std::to_string(lambda) + " outside [0, " +
                              std::to_string(bound) + "]");
    }
    if (lambda == 0.0) {
        return;
    }
    const Index dim = entries_.rows();
    const double weight = lambda / static_cast<double>(bit(qubits.size()));

    // reduced(r, c) = sum_a rho(r|a, c|a) over assignments a of the channel
    // qubits, defined for r and c with the channel bits cleared.
    ComplexMatrix reduced = ComplexMatrix::Zero(dim, dim);
    for (Index r = 0; r < dim; ++r) {
        if (r & qmask) continue;
        for (Index c = 0; c < dim; ++c) {
            if (c & qmask) continue;
            Complex sum = 0.0;
            Index a = 0;
            do {
                sum += entries_(r | a, c | a);
                a = (a - qmask) & qmask;
            } while (a != 0);
            reduced(r, c) = sum;
        }
    }
    entries_ *= (1.0 - lambda);
    for (Index r = 0; r < dim; ++r) {
        for (Index c = 0; c < dim; ++c) {
            if ((r & qmask) == (c & qmask)) {
                entries_(r, c) += weight * reduced(r & ~qmask, c & ~qmask);
            }
        }
    }
}

double DensityMatrix::hermiticity_error() const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(entries_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

Eigen::VectorXd DensityMatrix::probabilities() const { return entries_.diagonal().real().cwiseMax(0.0); }

Statevector evolve_statevector(const Circuit &circuit, Statevector initial) {
    if (initial.num_qubits() != circuit.num_qubits()) {
        throw ValidationError("statevector has " + std::to_string(initial.num_qubits()) +
                              " qubits, circuit has " + std::to_string(circuit.num_qubits()));
    }
    for (const auto &g : circuit.gates()) {
        initial.apply(g);
    }
    return initial;
}

DensityMatrix apply_gate_density(DensityMatrix rho, const GateInstance &gate) {
    rho.apply(gate);
    return rho;
}

DensityMatrix apply_depolarizing(DensityMatrix rho, std::span<const Qubit> qubits, double lambda) {
    rho.apply_depolarizing(qubits, lambda);
    return rho;
}

Distribution marginalize(const Eigen::VectorXd &probabilities, std::span<const Qubit> measured_qubits) {
    const std::size_t m = measured_qubits.size();
    std::vector<double> acc(std::size_t{1} << m, 0.0);
    for (Index b = 0; b < probabilities.size(); ++b) {
        std::size_t key = 0;
        for (std::size_t i = 0; i < m; ++i) {
            key = (key << 1) | static_cast<std::size_t>((b >> measured_qubits[i]) & 1);
        }
        acc[key] += probabilities(b);
    }
    Distribution dist;
    for (std::size_t key = 0; key < acc.size(); ++key) {
        if (acc[key] >= 1e-14) {
            dist[to_bitstring(key, m)] = acc[key];
        }
    }
    return dist;
}

Distribution run_exact(const Circuit &circuit, const std::optional<NoiseModel> &noise) {
    if (!noise) {
        const Statevector psi = evolve_statevector(circuit, Statevector(circuit.num_qubits()));
        return marginalize(psi.probabilities(), circuit.measured_qubits());
    }
    noise->validate();
    if (circuit.num_qubits() > kDensityQubitCap) {
        throw ValidationError("density-matrix simulation is limited to " + std::to_string(kDensityQubitCap) +
                              " qubits");
    }
    const Circuit lowered =
        noise->mode == NoiseMode::Native && !is_native(circuit) ? transpile(circuit) : circuit;
    DensityMatrix rho(lowered.num_qubits());
    for (const auto &g : lowered.gates()) {
        rho.apply(g);
        const double lambda = lambda_for(*noise, g);
        if (lambda > 0.0) {
            rho.apply_depolarizing(g.operands, lambda);
        }
    }
    return marginalize(rho.probabilities(), lowered.measured_qubits());
}

Counts sample_counts(const Distribution &dist, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw ValidationError("shots must be >= 1");
    }
    validate_distribution(dist);
    std::vector<const std::string *> keys;
    std::vector<double> cumulative;
    double total = 0.0;
    for (const auto &[key, p] : dist) {
        total += p;
        keys.push_back(&key);
        cumulative.push_back(total);
    }
    std::mt19937_64 rng(seed);
    Counts out;
    out.shots = shots;
    std::vector<std::uint64_t> tally(keys.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        // 53-bit uniform in [0, total); avoids implementation-defined distributions.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        if (it == cumulative.end()) --it;
        ++tally[static_cast<std::size_t>(it - cumulative.begin())];
    }
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (tally[i] > 0) {
            out.counts[*keys[i]] = tally[i];
        }
    }
    return out;
}

}  // namespace coinwalk
