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

#ifndef WITNESSLAB_WITNESS_H
#define WITNESSLAB_WITNESS_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "witnesslab/quantum_state.h"
#include "witnesslab/rational.h"
#include "witnesslab/stabilizers.h"

namespace witnesslab {

enum class WitnessKind {
    Wtilde,          // 1 - 2|T><T|
    W1,              // (N-1) - sum_k S_k
    W2,              // 3 - 2(prod_{odd k} (1+S_k)/2 + prod_{even k} (1+S_k)/2)
    W3,              // 2 - 3 prod_j (1+S_{2j-1}+S_{2j})/3 [(1+S_N)/2 for odd N]
    PerDof,          // 1 - S_{2j} - S_{2j-1}
    PerDofAlt,       // (1 - S_{2j} - S_{2j-1} - S_{2j}S_{2j-1})/2 = 1 - 2|phi+><phi+|_j
    QuditBipartite,  // 1/2^n - |Xi><Xi|
};

/// "wtilde", "w1", "w2", "w3", "wj:<j>", "wjalt:<j>", "qudit".
std::string witness_id(WitnessKind kind, unsigned dof = 0);

/// A witness kind bound to the system whose stabilizers define it.
class WitnessSpec {
   public:
    /// Throws ValidationError when the kind needs an HE system (per-DOF and
    /// qudit witnesses) or the DOF index is out of range.
    WitnessSpec(WitnessKind kind, StabilizerSet system, unsigned dof = 0);

    static WitnessSpec parse(std::string_view id, StabilizerSet system);

    WitnessKind kind() const {
        return kind_;
    }
    const StabilizerSet &system() const {
        return system_;
    }
    unsigned dof() const {
        return dof_;
    }
    unsigned num_qubits() const {
        return system_.num_qubits();
    }
    std::string id() const {
        return witness_id(kind_, dof_);
    }
    /// <T|W|T> = -1. Every kind except QuditBipartite.
    bool is_normalized() const {
        return kind_ != WitnessKind::QuditBipartite;
    }

   private:
    WitnessKind kind_;
    StabilizerSet system_;
    unsigned dof_;
};

/// Eigenvalue function of a witness over stabilizer-basis bit-strings:
/// bit k of s is the outcome of generator k (0-based), S_k -> (-1)^{s_k}.
///
/// Values are exact: lambda(s) = scaled(s) / denominator() + shift, where the
/// shift is an optional constant added to the operator (used to move the
/// constant term of W3 away from c0 = 2).
class DiagonalWitness {
   public:
    /// N up to 62. `dof` is used by the per-DOF kinds only.
    DiagonalWitness(WitnessKind kind, unsigned n_stabilizers, unsigned dof = 0);
    explicit DiagonalWitness(const WitnessSpec &spec);

    /// W3 with its constant term set to `c0`.
    static DiagonalWitness w3_with_constant(unsigned n_stabilizers, const Rational &c0);

    WitnessKind kind() const {
        return kind_;
    }
    unsigned num_stabilizers() const {
        return n_;
    }
    unsigned dof() const {
        return dof_;
    }
    const Rational &shift() const {
        return shift_;
    }
    std::int64_t denominator() const {
        return denominator_;
    }
    std::int64_t scaled_eigenvalue(std::uint64_t s) const;
    Rational eigenvalue(std::uint64_t s) const;
    double eigenvalue_double(std::uint64_t s) const;

    DiagonalWitness shifted(const Rational &delta) const;

   private:
    WitnessKind kind_;
    unsigned n_;
    unsigned dof_;
    std::int64_t denominator_;
    Rational shift_;
};

/// Dense Hermitian 2^N x 2^N matrix, assembled from its operator definition
/// (stabilizer matrices and projectors onto the dense target state).
Matrix build_dense(const WitnessSpec &spec, const DenseLimits &limits = {});

DiagonalWitness build_diagonal(const WitnessSpec &spec);

/// Coefficients c_m of W = sum_m c_m prod_{k in m} S_k, indexed by mask m.
/// Obtained from lambda by the Walsh-Hadamard transform; N <= 16.
std::vector<Rational> stabilizer_expansion(const DiagonalWitness &diag);

// ---- traces -----------------------------------------------------------------

/// Closed-form Tr[W] for a kind on N qubits.
Rational closed_form_trace(WitnessKind kind, unsigned n_qubits);
/// sum_s lambda(s), exact. Throws CapacityError for N > max_qubits.
Rational bitstring_trace(const DiagonalWitness &diag, unsigned max_qubits = 30);
double dense_trace(const WitnessSpec &spec, const DenseLimits &limits = {});

struct TraceReport {
    Rational closed_form;
    std::optional<Rational> bitstring;
    std::optional<double> dense;
};

/// Tr[W] by all routes available at this size (bit-string sum for N <= 30,
/// dense for N <= dense_max_qubits). Throws ConsistencyError if they disagree
/// (exact equality for the rational routes, 1e-9 relative for the dense one).
TraceReport trace(const WitnessSpec &spec, unsigned dense_max_qubits = 8);

// ---- noise thresholds -------------------------------------------------------

/// p_M = D / (Tr[W] + D). Requires a normalized kind.
Rational noise_threshold(WitnessKind kind, unsigned n_qubits);
Rational noise_threshold(const WitnessSpec &spec);

/// p_M in its printed closed form, when the kind has one. For odd-N W2 this
/// differs from D/(Tr+D).
std::optional<Rational> printed_noise_threshold(WitnessKind kind, unsigned n_qubits);

// ---- expectation values -----------------------------------------------------

double expectation(const Matrix &witness, const DensityOperator &rho);
double expectation(const Matrix &witness, const StateVector &state);

/// Tr[W rho] from the dense operator.
double expectation(const WitnessSpec &spec, const DensityOperator &rho, const DenseLimits &limits = {});
double expectation(const WitnessSpec &spec, const StateVector &state, const DenseLimits &limits = {});

/// <s|rho|s> for every stabilizer-basis bit-string s, via the Walsh-Hadamard
/// transform of the stabilizer-product expectations.
std::vector<double> stabilizer_populations(const StabilizerSet &system, const DensityOperator &rho);
std::vector<double> stabilizer_populations(const StabilizerSet &system, const StateVector &state);

/// sum_s lambda(s) <s|rho|s>. Agrees with the dense route for any state since
/// every witness here is diagonal in the stabilizer basis.
double expectation_diagonal(const DiagonalWitness &diag, const std::vector<double> &populations);

/// Tr[W rho] for rho = (1-p)|T><T| + p 1/D, without dense algebra:
/// (1-p) lambda(0) + p Tr[W]/D.
double noisy_expectation(WitnessKind kind, unsigned n_qubits, double p_noise);

// ---- certification ----------------------------------------------------------

struct Certificate {
    double alpha;
    double min_value;                       // min_s lambda_candidate(s) - alpha lambda_Wtilde(s)
    std::uint64_t argmin;                   // first minimizing bit-string
    std::vector<std::uint64_t> minimizers;  // all within 1e-12 of the minimum (capped at 4096)
    double value_at_zero;                   // lambda_1 of the W3 analysis
    double min_single_bit;                  // lambda_2: min over strings with one bit set
    bool valid;                             // min_value >= -1e-9
};

/// Exhaustive scan of W' - alpha Wtilde over all 2^N bit-strings (N <= 30).
/// A nonnegative minimum certifies W' as a witness whenever Wtilde is one.
Certificate certify_witness(const DiagonalWitness &candidate, double alpha);
Certificate certify_witness(const WitnessSpec &candidate, double alpha);

// ---- detection --------------------------------------------------------------

struct DetectionReport {
    std::vector<double> per_dof;  // Tr[W^(j) rho], j = 1..n
    double main_value;
    bool all_dofs_entangled;
    bool main_negative;
    bool detected;

    std::string verdict() const {
        return detected ? "hyperentanglement detected" : "not detected";
    }
};

/// Per-DOF witnesses plus the main witness. Values count as negative when
/// below -(margin + 1e-12). A "not detected" verdict never implies separability.
DetectionReport detect_hyperentanglement(const DensityOperator &rho, const WitnessSpec &main_witness,
                                         double margin = 0.0);
DetectionReport detect_hyperentanglement(const StateVector &state, const WitnessSpec &main_witness,
                                         double margin = 0.0);

}  // namespace witnesslab

#endif
