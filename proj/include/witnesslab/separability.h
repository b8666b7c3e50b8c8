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

#ifndef WITNESSLAB_SEPARABILITY_H
#define WITNESSLAB_SEPARABILITY_H

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "witnesslab/quantum_state.h"

namespace witnesslab {

/// A cut {A_j} u I | {B_j} u J of the 2n qubits, with {I, J} a partition of
/// every qubit outside DOF j. Masks are over qubit positions.
struct Bipartition {
    unsigned n_dofs;
    unsigned dof;  // j (1-based); 0 for cuts outside the family, e.g. the particle cut
    std::uint64_t left_mask;
    std::uint64_t right_mask;

    /// "j=1;I=A2,B2;J=". The particle cut is "A|B".
    std::string label() const;
    /// Number of DOFs whose two qubits sit on opposite sides.
    unsigned split_pairs() const;

    /// All of particle A on the left, all of B on the right.
    static Bipartition particle_cut(unsigned n_dofs);

    friend bool operator==(const Bipartition &, const Bipartition &) = default;
};

/// n choices of j times 2^(2n-2) splits of the remaining qubits. Cuts reachable
/// from several j are kept once per j.
std::vector<Bipartition> enumerate_partitions(unsigned n_dofs);

/// Largest squared singular value of the (left x right) matricization:
/// max over product states phi_L (x) phi_R of |<target|phi_L phi_R>|^2.
double max_overlap_svd(const StateVector &target, std::uint64_t left_mask);
double max_overlap_svd(const StateVector &target, const Bipartition &partition);

/// Rebuilds the full state phi_L (x) phi_R from its two factors.
StateVector embed_product(const Amplitudes &left, const Amplitudes &right, std::uint64_t left_mask,
                          unsigned n_qubits);

enum class OracleMethod { Svd, Search };

struct OracleResult {
    double max_overlap_sq;
    Bipartition argmax_partition;
    OracleMethod method;
    unsigned iterations;
};

struct PartitionValue {
    Bipartition partition;
    double overlap_sq;
    unsigned iterations;
};

struct OverlapBoundReport {
    OracleResult result;
    std::vector<PartitionValue> per_partition;
    bool bound_holds;            // max <= 1/2 + 1e-9
    bool saturating_confirmed;   // the |00>_{A_jB_j} (x) Bell-pairs state reaches the max and factorizes across the argmax cut
};

/// SVD oracle over every partition of the family for the HE state on n DOFs.
OverlapBoundReport verify_overlap_bound(unsigned n_dofs, const DenseLimits &limits = {});

struct SearchOptions {
    unsigned restarts = 10;
    std::uint64_t seed = 7;
    double tolerance = 1e-10;      // stop when the overlap changes by less than this
    unsigned max_iterations = 10000;
    /// Called with each iterate's factors (left, right) and its overlap.
    std::function<void(const Amplitudes &, const Amplitudes &, double)> on_iterate;
};

/// Alternating maximization over the two factors from random starts. Each step
/// contracts the target with the fixed factor and renormalizes, so the overlap
/// never decreases within a restart. Throws DomainError for zero restarts.
OracleResult search_overlap(const StateVector &target, const Bipartition &partition, const SearchOptions &options = {});

/// Search over every partition of the family for the HE state on n DOFs.
OverlapBoundReport search_overlap_bound(unsigned n_dofs, const SearchOptions &options = {},
                                          const DenseLimits &limits = {});

/// Max overlap of the HE state with product states across the particle cut.
double qudit_overlap_bound(unsigned n_dofs, const DenseLimits &limits = {});

}  // namespace witnesslab

#endif
