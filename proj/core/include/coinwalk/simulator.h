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
#include <cstdint>
#include <optional>
#include <span>

#include <Eigen/Dense>

#include "coinwalk/circuit.h"
#include "coinwalk/distribution.h"
#include "coinwalk/noise_model.h"

namespace coinwalk {

using ComplexVector = Eigen::VectorXcd;

class Statevector {
  public:
    /// |0...0> on `num_qubits` qubits.
    explicit Statevector(std::size_t num_qubits);
    explicit Statevector(ComplexVector amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    const ComplexVector &amplitudes() const { return amplitudes_; }
    ComplexVector &amplitudes() { return amplitudes_; }

    void apply(const GateInstance &gate);
    double norm() const { return amplitudes_.norm(); }

    /// |amplitude|^2 per basis index.
    Eigen::VectorXd probabilities() const;

  private:
    std::size_t num_qubits_;
    ComplexVector amplitudes_;
};

class DensityMatrix {
  public:
    /// |0...0><0...0| on `num_qubits` qubits.
    explicit DensityMatrix(std::size_t num_qubits);
    explicit DensityMatrix(ComplexMatrix entries);
    static DensityMatrix from_statevector(const Statevector &psi);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const ComplexMatrix &entries() const { return entries_; }

    /// rho -> U rho U^dagger.
    void apply(const GateInstance &gate);

    /// (1 - lambda) rho + lambda Tr_Q[rho] (x) I / 2^k on the k qubits Q.
    void apply_depolarizing(std::span<const Qubit> qubits, double lambda);

    Complex trace() const { return entries_.trace(); }
    double hermiticity_error() const;
    double min_eigenvalue() const;

    /// Real diagonal, negative rounding residue clamped to zero.
    Eigen::VectorXd probabilities() const;

  private:
    std::size_t num_qubits_;
    ComplexMatrix entries_;
};

inline constexpr double kDensityHermitianTol = 1e-10;
inline constexpr double kDensityTraceTol = 1e-10;
inline constexpr double kDensityPsdFloor = -1e-9;

/// Largest register run_exact accepts on the density-matrix path.
inline constexpr std::size_t kDensityQubitCap = 12;

Statevector evolve_statevector(const Circuit &circuit, Statevector initial);

DensityMatrix apply_gate_density(DensityMatrix rho, const GateInstance &gate);
DensityMatrix apply_depolarizing(DensityMatrix rho, std::span<const Qubit> qubits, double lambda);

/// Sums basis-state probabilities onto `measured_qubits` (MSB first). Entries
/// below 1e-14 are dropped.
Distribution marginalize(const Eigen::VectorXd &probabilities, std::span<const Qubit> measured_qubits);

/// Deterministic output distribution. Without a noise model the statevector
/// path is used; with one, each gate is followed by a depolarizing channel on
/// its operands. Native-mode models lower the circuit first.
Distribution run_exact(const Circuit &circuit, const std::optional<NoiseModel> &noise = std::nullopt);

/// Multinomial draw of `shots` outcomes, fully determined by `seed`.
Counts sample_counts(const Distribution &dist, std::uint64_t shots, std::uint64_t seed);

}  // namespace coinwalk
