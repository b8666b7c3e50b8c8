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

#include "witnesslab/states.h"

#include <bit>
#include <cmath>
#include <string>

#include "witnesslab/errors.h"
#include "witnesslab/pauli.h"

namespace witnesslab {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

/// Scatters the low bits of `value` into the set positions of `mask`.
std::uint64_t deposit(std::uint64_t value, std::uint64_t mask) {
    std::uint64_t out = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) {
        if (value & 1) {
            out |= m & (~m + 1);
        }
        value >>= 1;
    }
    return out;
}

void check_weights(double total) {
    if (std::abs(total - 1.0) > 1e-12) {
        throw DomainError("mixture weights sum to " + std::to_string(total) + ", expected 1");
    }
}

}  // namespace

Gate1 hadamard_gate() {
    Gate1 h;
    h << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
    return h;
}

StateVector bell_phi_plus() {
    Amplitudes amps(4);
    amps << kInvSqrt2, 0, 0, kInvSqrt2;
    return StateVector(2, std::move(amps));
}

StateVector build_he_state(unsigned n_dofs, const DenseLimits &limits) {
    return build_he_state(n_dofs, {}, limits);
}

StateVector build_he_state(unsigned n_dofs, std::span<const Gate1> b_unitaries, const DenseLimits &limits) {
    if (n_dofs == 0) {
        throw ValidationError("HE state needs at least one DOF");
    }
    check_vector_capacity(2 * n_dofs, limits);
    if (!b_unitaries.empty() && b_unitaries.size() != n_dofs) {
        throw DimensionError("need one B-side unitary per DOF");
    }
    StateVector state = bell_phi_plus();
    for (unsigned j = 2; j <= n_dofs; j++) {
        state = state.tensor(bell_phi_plus());
    }
    QubitIndexMap map(n_dofs);
    for (unsigned j = 1; j <= b_unitaries.size(); j++) {
        state = apply_gate(state, map.qubit(j, Particle::B), b_unitaries[j - 1]);
    }
    return state;
}

StateVector build_graph_state(const GraphSpec &graph, const DenseLimits &limits) {
    unsigned n = graph.num_vertices();
    check_vector_capacity(n, limits);
    auto dim = Eigen::Index{1} << n;
    StateVector state(n, Amplitudes::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim))));
    for (auto [u, v] : graph.edges()) {
        state = apply_cz(state, u, v);
    }
    return state;
}

StateVector build_target_state(const StabilizerSet &system, const DenseLimits &limits) {
    if (system.is_hyperentangled()) {
        return build_he_state(system.num_dofs(), limits);
    }
    return build_graph_state(*system.graph_spec(), limits);
}

StateVector build_saturating_state(unsigned n_dofs, unsigned dof, const DenseLimits &limits) {
    if (dof == 0 || dof > n_dofs) {
        throw DimensionError("DOF index out of range");
    }
    check_vector_capacity(2 * n_dofs, limits);
    StateVector zero_pair = StateVector::basis(2, 0);
    StateVector state = dof == 1 ? zero_pair : bell_phi_plus();
    for (unsigned j = 2; j <= n_dofs; j++) {
        state = state.tensor(j == dof ? zero_pair : bell_phi_plus());
    }
    return state;
}

ExampleStates build_example_states() {
    StateVector zero_pair = StateVector::basis(2, 0);
    StateVector psi1 = zero_pair.tensor(bell_phi_plus());
    StateVector psi2 = bell_phi_plus().tensor(zero_pair);
    std::pair<double, StateVector> parts[] = {{0.5, psi1}, {0.5, psi2}};
    DensityOperator rho = mixture(parts);
    return ExampleStates{std::move(psi1), std::move(psi2), std::move(rho)};
}

DensityOperator mixture(std::span<const std::pair<double, StateVector>> components) {
    if (components.empty()) {
        throw DomainError("empty mixture");
    }
    unsigned n = components.front().second.num_qubits();
    check_density_capacity(n);
    auto dim = Eigen::Index{1} << n;
    Matrix m = Matrix::Zero(dim, dim);
    double total = 0;
    for (const auto &[w, v] : components) {
        if (v.num_qubits() != n) {
            throw DimensionError("mixture components act on different qubit counts");
        }
        if (w < 0) {
            throw DomainError("negative mixture weight");
        }
        m += w * v.amplitudes() * v.amplitudes().adjoint();
        total += w;
    }
    check_weights(total);
    return DensityOperator(n, std::move(m));
}

DensityOperator mixture(std::span<const std::pair<double, DensityOperator>> components) {
    if (components.empty()) {
        throw DomainError("empty mixture");
    }
    unsigned n = components.front().second.num_qubits();
    auto dim = Eigen::Index{1} << n;
    Matrix m = Matrix::Zero(dim, dim);
    double total = 0;
    for (const auto &[w, rho] : components) {
        if (rho.num_qubits() != n) {
            throw DimensionError("mixture components act on different qubit counts");
        }
        if (w < 0) {
            throw DomainError("negative mixture weight");
        }
        m += w * rho.matrix();
        total += w;
    }
    check_weights(total);
    return DensityOperator(n, std::move(m));
}

DensityOperator add_white_noise(const DensityOperator &rho, double p_noise) {
    if (!(p_noise >= 0.0 && p_noise <= 1.0)) {
        throw DomainError("noise probability must lie in [0, 1]");
    }
    auto dim = static_cast<Eigen::Index>(rho.dimension());
    Matrix m = (1.0 - p_noise) * rho.matrix();
    m.diagonal().array() += p_noise / static_cast<double>(dim);
    return DensityOperator(rho.num_qubits(), std::move(m));
}

DensityOperator add_white_noise(const StateVector &state, double p_noise) {
    return add_white_noise(DensityOperator::pure(state), p_noise);
}

DensityOperator partial_trace(const DensityOperator &rho, std::uint64_t keep_mask) {
    unsigned n = rho.num_qubits();
    std::uint64_t all = (std::uint64_t{1} << n) - 1;
    if (keep_mask == 0 || (keep_mask & ~all)) {
        throw DimensionError("partial trace keep-mask must be a nonempty subset of the qubits");
    }
    std::uint64_t traced_mask = all & ~keep_mask;
    auto kept = static_cast<unsigned>(std::popcount(keep_mask));
    auto kept_dim = std::uint64_t{1} << kept;
    auto traced_dim = std::uint64_t{1} << (n - kept);
    const Matrix &m = rho.matrix();
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(kept_dim), static_cast<Eigen::Index>(kept_dim));
    for (std::uint64_t e = 0; e < traced_dim; e++) {
        std::uint64_t env = deposit(e, traced_mask);
        for (std::uint64_t a = 0; a < kept_dim; a++) {
            auto row = static_cast<Eigen::Index>(deposit(a, keep_mask) | env);
            for (std::uint64_t b = 0; b < kept_dim; b++) {
                auto col = static_cast<Eigen::Index>(deposit(b, keep_mask) | env);
                out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) += m(row, col);
            }
        }
    }
    return DensityOperator(kept, std::move(out));
}

DensityOperator partial_trace(const StateVector &state, std::uint64_t keep_mask) {
    unsigned n = state.num_qubits();
    std::uint64_t all = (std::uint64_t{1} << n) - 1;
    if (keep_mask == 0 || (keep_mask & ~all)) {
        throw DimensionError("partial trace keep-mask must be a nonempty subset of the qubits");
    }
    std::uint64_t traced_mask = all & ~keep_mask;
    auto kept = static_cast<unsigned>(std::popcount(keep_mask));
    check_density_capacity(kept);
    auto kept_dim = Eigen::Index{1} << kept;
    auto traced_dim = std::uint64_t{1} << (n - kept);
    // Matricize as (kept x traced) and form M M^dagger.
    Matrix psi(kept_dim, static_cast<Eigen::Index>(traced_dim));
    for (std::uint64_t e = 0; e < traced_dim; e++) {
        std::uint64_t env = deposit(e, traced_mask);
        for (Eigen::Index a = 0; a < kept_dim; a++) {
            psi(a, static_cast<Eigen::Index>(e)) = state[deposit(static_cast<std::uint64_t>(a), keep_mask) | env];
        }
    }
    return DensityOperator(kept, psi * psi.adjoint());
}

DensityOperator reduce_to_dof(const DensityOperator &rho, unsigned dof) {
    if (rho.num_qubits() % 2) {
        throw DimensionError("DOF reduction needs an even qubit count");
    }
    QubitIndexMap map(rho.num_qubits() / 2);
    std::uint64_t keep = (std::uint64_t{1} << map.qubit(dof, Particle::A)) |
                         (std::uint64_t{1} << map.qubit(dof, Particle::B));
    return partial_trace(rho, keep);
}

DensityOperator reduce_to_dof(const StateVector &state, unsigned dof) {
    if (state.num_qubits() % 2) {
        throw DimensionError("DOF reduction needs an even qubit count");
    }
    QubitIndexMap map(state.num_qubits() / 2);
    std::uint64_t keep = (std::uint64_t{1} << map.qubit(dof, Particle::A)) |
                         (std::uint64_t{1} << map.qubit(dof, Particle::B));
    return partial_trace(state, keep);
}

StateVector apply_gate(const StateVector &state, unsigned qubit, const Gate1 &gate) {
    if (qubit >= state.num_qubits()) {
        throw DimensionError("qubit index out of range");
    }
    Amplitudes amps = state.amplitudes();
    std::uint64_t bit = std::uint64_t{1} << qubit;
    for (std::uint64_t b = 0; b < state.dimension(); b++) {
        if (b & bit) {
            continue;
        }
        auto i0 = static_cast<Eigen::Index>(b);
        auto i1 = static_cast<Eigen::Index>(b | bit);
        Complex a0 = amps[i0];
        Complex a1 = amps[i1];
        amps[i0] = gate(0, 0) * a0 + gate(0, 1) * a1;
        amps[i1] = gate(1, 0) * a0 + gate(1, 1) * a1;
    }
    return StateVector::normalized(state.num_qubits(), std::move(amps));
}

Matrix apply_gate_left(const Matrix &m, unsigned qubit, const Gate1 &gate) {
    Matrix out = m;
    std::uint64_t bit = std::uint64_t{1} << qubit;
    if (bit >= static_cast<std::uint64_t>(m.rows())) {
        throw DimensionError("qubit index out of range");
    }
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(m.rows()); b++) {
        if (b & bit) {
            continue;
        }
        auto i0 = static_cast<Eigen::Index>(b);
        auto i1 = static_cast<Eigen::Index>(b | bit);
        out.row(i0) = gate(0, 0) * m.row(i0) + gate(0, 1) * m.row(i1);
        out.row(i1) = gate(1, 0) * m.row(i0) + gate(1, 1) * m.row(i1);
    }
    return out;
}

StateVector apply_cz(const StateVector &state, unsigned a, unsigned b) {
    if (a >= state.num_qubits() || b >= state.num_qubits() || a == b) {
        throw DimensionError("bad CZ qubits");
    }
    Amplitudes amps = state.amplitudes();
    std::uint64_t both = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    for (std::uint64_t i = 0; i < state.dimension(); i++) {
        if ((i & both) == both) {
            amps[static_cast<Eigen::Index>(i)] = -amps[static_cast<Eigen::Index>(i)];
        }
    }
    return StateVector(state.num_qubits(), std::move(amps));
}

}  // namespace witnesslab
