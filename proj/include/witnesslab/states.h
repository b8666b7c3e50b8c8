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

#ifndef WITNESSLAB_STATES_H
#define WITNESSLAB_STATES_H

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "witnesslab/graph.h"
#include "witnesslab/quantum_state.h"
#include "witnesslab/stabilizers.h"

namespace witnesslab {

using Gate1 = Eigen::Matrix2cd;

Gate1 hadamard_gate();

/// Bell state (|00> + |11>)/sqrt(2).
StateVector bell_phi_plus();

/// Tensor product of n Bell pairs on (A_j, B_j).
StateVector build_he_state(unsigned n_dofs, const DenseLimits &limits = {});

/// HE state with a single-qubit unitary applied to B_j of every DOF, giving
/// another product of maximally entangled pairs. `b_unitaries` has one gate
/// per DOF.
StateVector build_he_state(unsigned n_dofs, std::span<const Gate1> b_unitaries, const DenseLimits &limits = {});

/// CZ on every edge of the all-plus state. CZ gates commute, so edge order
/// does not matter.
StateVector build_graph_state(const GraphSpec &graph, const DenseLimits &limits = {});

/// |Xi> for HE systems, |G> for graph systems.
StateVector build_target_state(const StabilizerSet &system, const DenseLimits &limits = {});

/// |0>_{A_j}|0>_{B_j} with Bell pairs on every other DOF. These product states
/// across A_j|B_j reach overlap 1/2 with the HE state.
StateVector build_saturating_state(unsigned n_dofs, unsigned dof, const DenseLimits &limits = {});

struct ExampleStates {
    StateVector psi1;        // |00>_{A1B1} |phi+>_{A2B2}
    StateVector psi2;        // |phi+>_{A1B1} |00>_{A2B2}
    DensityOperator rho_prime;  // equal mixture of psi1 and psi2
};

ExampleStates build_example_states();

/// sum_i w_i |v_i><v_i|. Weights must be non-negative and sum to 1.
DensityOperator mixture(std::span<const std::pair<double, StateVector>> components);
/// sum_i w_i rho_i.
DensityOperator mixture(std::span<const std::pair<double, DensityOperator>> components);

/// (1-p) rho + p 1/D. Throws DomainError for p outside [0, 1].
DensityOperator add_white_noise(const DensityOperator &rho, double p_noise);
DensityOperator add_white_noise(const StateVector &state, double p_noise);

/// Reduced state on the qubits in `keep_mask`, in ascending qubit order.
DensityOperator partial_trace(const DensityOperator &rho, std::uint64_t keep_mask);
DensityOperator partial_trace(const StateVector &state, std::uint64_t keep_mask);

/// Two-qubit reduced state on (A_j, B_j); j is 1-based.
DensityOperator reduce_to_dof(const DensityOperator &rho, unsigned dof);
DensityOperator reduce_to_dof(const StateVector &state, unsigned dof);

StateVector apply_gate(const StateVector &state, unsigned qubit, const Gate1 &gate);
Matrix apply_gate_left(const Matrix &m, unsigned qubit, const Gate1 &gate);
StateVector apply_cz(const StateVector &state, unsigned a, unsigned b);

}  // namespace witnesslab

#endif
