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

#include "witnesslab/quantum_state.h"

#include <cmath>
#include <string>

#include "witnesslab/errors.h"

namespace witnesslab {

void check_vector_capacity(unsigned n_qubits, const DenseLimits &limits) {
    if (n_qubits == 0 || n_qubits > limits.vector_qubits) {
        throw CapacityError("state vector on " + std::to_string(n_qubits) +
                            " qubits exceeds the dense cap of " + std::to_string(limits.vector_qubits));
    }
}

void check_density_capacity(unsigned n_qubits, const DenseLimits &limits) {
    if (n_qubits == 0 || n_qubits > limits.density_qubits) {
        throw CapacityError("density operator on " + std::to_string(n_qubits) +
                            " qubits exceeds the dense cap of " + std::to_string(limits.density_qubits));
    }
}

StateVector::StateVector(unsigned n_qubits, Amplitudes amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits_ == 0 || n_qubits_ >= 63 || static_cast<std::uint64_t>(amplitudes_.size()) != dimension()) {
        throw DimensionError("state vector needs 2^" + std::to_string(n_qubits_) + " amplitudes, got " +
                             std::to_string(amplitudes_.size()));
    }
    double norm_sq = amplitudes_.squaredNorm();
    if (std::abs(norm_sq - 1.0) > 1e-12) {
        throw DomainError("state vector is not normalized (squared norm " + std::to_string(norm_sq) + ")");
    }
}

StateVector StateVector::basis(unsigned n_qubits, std::uint64_t index) {
    check_vector_capacity(n_qubits);
    Amplitudes amps = Amplitudes::Zero(Eigen::Index{1} << n_qubits);
    if (index >= static_cast<std::uint64_t>(amps.size())) {
        throw DimensionError("basis index out of range");
    }
    amps[static_cast<Eigen::Index>(index)] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::normalized(unsigned n_qubits, Amplitudes amplitudes) {
    double norm = amplitudes.norm();
    if (norm == 0.0) {
        throw DomainError("cannot normalize the zero vector");
    }
    amplitudes /= norm;
    return StateVector(n_qubits, std::move(amplitudes));
}

Complex StateVector::inner(const StateVector &other) const {
    if (other.n_qubits_ != n_qubits_) {
        throw DimensionError("inner product of states with different qubit counts");
    }
    return amplitudes_.dot(other.amplitudes_);
}

double StateVector::overlap_sq(const StateVector &other) const {
    return std::norm(inner(other));
}

StateVector StateVector::tensor(const StateVector &other) const {
    unsigned n = n_qubits_ + other.n_qubits_;
    Amplitudes amps(Eigen::Index{1} << n);
    Eigen::Index low = amplitudes_.size();
    for (Eigen::Index hi = 0; hi < other.amplitudes_.size(); hi++) {
        amps.segment(hi * low, low) = other.amplitudes_[hi] * amplitudes_;
    }
    return StateVector::normalized(n, std::move(amps));
}

DensityOperator::DensityOperator(unsigned n_qubits, Matrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
    if (n_qubits_ == 0 || n_qubits_ >= 32 || static_cast<std::uint64_t>(matrix_.rows()) != dimension() ||
        matrix_.rows() != matrix_.cols()) {
        throw DimensionError("density operator on " + std::to_string(n_qubits_) + " qubits needs a square 2^N matrix");
    }
    double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
    if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
        throw DomainError("density operator is not Hermitian");
    }
    Complex tr = matrix_.trace();
    if (std::abs(tr - 1.0) > 1e-10) {
        throw DomainError("density operator trace is " + std::to_string(tr.real()) + ", expected 1");
    }
}

DensityOperator DensityOperator::pure(const StateVector &state) {
    check_density_capacity(state.num_qubits());
    const Amplitudes &a = state.amplitudes();
    return DensityOperator(state.num_qubits(), a * a.adjoint());
}

DensityOperator DensityOperator::maximally_mixed(unsigned n_qubits) {
    check_density_capacity(n_qubits);
    auto dim = Eigen::Index{1} << n_qubits;
    return DensityOperator(n_qubits, Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

Eigen::VectorXd DensityOperator::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double DensityOperator::min_eigenvalue() const {
    return eigenvalues().minCoeff();
}

bool DensityOperator::satisfies_invariants() const {
    if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        return false;
    }
    if (std::abs(matrix_.trace() - 1.0) > 1e-10) {
        return false;
    }
    return min_eigenvalue() >= -1e-9;
}

}  // namespace witnesslab
