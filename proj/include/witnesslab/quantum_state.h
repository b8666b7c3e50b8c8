// Copyright 2026 The witnesslab Authors
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

#ifndef WITNESSLAB_QUANTUM_STATE_H
#define WITNESSLAB_QUANTUM_STATE_H

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace witnesslab {

using Complex = std::complex<double>;
using Amplitudes = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Qubit caps for dense representations. Vectors hold 2^N amplitudes,
/// density operators 4^N entries.
struct DenseLimits {
    unsigned vector_qubits = 16;
    unsigned density_qubits = 12;
};

void check_vector_capacity(unsigned n_qubits, const DenseLimits &limits = {});
void check_density_capacity(unsigned n_qubits, const DenseLimits &limits = {});

/// Normalized pure state on N qubits. Qubit k is bit k of the basis index.
class StateVector {
   public:
    /// Throws DimensionError on a size mismatch and DomainError when the
    /// squared norm deviates from 1 by more than 1e-12.
    StateVector(unsigned n_qubits, Amplitudes amplitudes);

    static StateVector basis(unsigned n_qubits, std::uint64_t index);
    /// Renormalizes a nonzero vector.
    static StateVector normalized(unsigned n_qubits, Amplitudes amplitudes);

    unsigned num_qubits() const {
        return n_qubits_;
    }
    std::uint64_t dimension() const {
        return std::uint64_t{1} << n_qubits_;
    }
    const Amplitudes &amplitudes() const {
        return amplitudes_;
    }
    Complex operator[](std::uint64_t index) const {
        return amplitudes_[static_cast<Eigen::Index>(index)];
    }

    /// <this|other>
    Complex inner(const StateVector &other) const;
    /// |<this|other>|^2
    double overlap_sq(const StateVector &other) const;

    /// this (x) other, with this on the low qubits.
    StateVector tensor(const StateVector &other) const;

   private:
    unsigned n_qubits_;
    Amplitudes amplitudes_;
};

/// Mixed state on N qubits.
class DensityOperator {
   public:
    /// Validates shape, hermiticity (1e-10) and unit trace (1e-10). Positivity
    /// is checked separately by min_eigenvalue() since it needs a diagonalization.
    DensityOperator(unsigned n_qubits, Matrix matrix);

    static DensityOperator pure(const StateVector &state);
    static DensityOperator maximally_mixed(unsigned n_qubits);

    unsigned num_qubits() const {
        return n_qubits_;
    }
    std::uint64_t dimension() const {
        return std::uint64_t{1} << n_qubits_;
    }
    const Matrix &matrix() const {
        return matrix_;
    }

    Eigen::VectorXd eigenvalues() const;
    double min_eigenvalue() const;
    /// Hermitian, unit trace and eigenvalues >= -1e-9.
    bool satisfies_invariants() const;

   private:
    unsigned n_qubits_;
    Matrix matrix_;
};

}  // namespace witnesslab

#endif
