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

#ifndef WITNESSLAB_PAULI_H
#define WITNESSLAB_PAULI_H

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include "witnesslab/quantum_state.h"

namespace witnesslab {

inline constexpr unsigned kMaxPauliQubits = 64;

/// Signed tensor product of single-qubit Paulis,
///
///     P = i^quarter_turns * prod_k X_k^{x_k} Z_k^{z_k},
///
/// with the X factor to the left of the Z factor on each qubit. A qubit with
/// both bits set is therefore XZ = -iY. Products follow the symplectic rule
/// (X^a Z^b)(X^c Z^d) = (-1)^{b.c} X^{a^c} Z^{b^d}, so the phase never leaves
/// {+1, +i, -1, -i}.
class PauliString {
   public:
    explicit PauliString(unsigned n_qubits, std::uint64_t x_mask = 0, std::uint64_t z_mask = 0,
                         unsigned quarter_turns = 0);

    /// Parses "XXIZ", "+ZZ", "-XYZ", "iX", "-iI": one letter per qubit, with an
    /// optional sign/phase prefix applied to the operator written with Y letters.
    static PauliString parse(std::string_view text);
    /// Single non-identity letter (X, Y or Z) on one qubit.
    static PauliString single(unsigned n_qubits, unsigned qubit, char letter);

    unsigned num_qubits() const {
        return n_qubits_;
    }
    std::uint64_t x_mask() const {
        return x_mask_;
    }
    std::uint64_t z_mask() const {
        return z_mask_;
    }
    std::uint64_t support() const {
        return x_mask_ | z_mask_;
    }
    unsigned weight() const;
    /// Power of i in the X^x Z^z representation.
    unsigned quarter_turns() const {
        return quarter_turns_;
    }
    Complex phase() const;

    bool is_hermitian() const;
    /// Power of i multiplying the letter form prod_k sigma_k (sigma in I,X,Y,Z).
    unsigned letter_quarter_turns() const;
    /// For Hermitian strings, P = sign * prod_k sigma_k with sign = +-1.
    int letter_sign() const;

    char letter(unsigned qubit) const;
    /// Letter form without the sign, e.g. "XYIZ".
    std::string letters() const;
    /// Letter form with its phase prefix ("+", "-", "+i", "-i").
    std::string str() const;

    /// Dense 2^N x 2^N matrix. Test/diagnostic helper, capped like density operators.
    Matrix to_dense() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;

   private:
    unsigned n_qubits_;
    std::uint64_t x_mask_;
    std::uint64_t z_mask_;
    unsigned quarter_turns_;
};

/// Operator product p*q. Throws DimensionError on a qubit-count mismatch.
PauliString multiply(const PauliString &p, const PauliString &q);
inline PauliString operator*(const PauliString &p, const PauliString &q) {
    return multiply(p, q);
}

/// True iff p*q == q*p, from the parity of the symplectic form.
bool commutes(const PauliString &p, const PauliString &q);

/// p|v>. Amplitudes are permuted by x_mask and signed by z_mask.
StateVector apply(const PauliString &p, const StateVector &v);
/// p * M (rows permuted and signed). M must have 2^N rows.
Matrix apply_left(const PauliString &p, const Matrix &m);

Complex expectation(const PauliString &p, const StateVector &v);
Complex expectation(const PauliString &p, const DensityOperator &rho);

enum class Particle { A, B };

/// Fixed DOF ordering [A_1, B_1, A_2, B_2, ...]: A_j on qubit 2j-2, B_j on
/// qubit 2j-1 (DOF indices are 1-based, qubits 0-based).
class QubitIndexMap {
   public:
    explicit QubitIndexMap(unsigned n_dofs);

    unsigned num_dofs() const {
        return n_dofs_;
    }
    unsigned num_qubits() const {
        return 2 * n_dofs_;
    }
    unsigned qubit(unsigned dof, Particle particle) const;
    unsigned dof_of(unsigned qubit) const;
    Particle particle_of(unsigned qubit) const;
    /// "A1", "B3", ...
    std::string label(unsigned qubit) const;
    /// Inverse of label().
    unsigned qubit_from_label(std::string_view label) const;

   private:
    unsigned n_dofs_;
};

}  // namespace witnesslab

#endif
