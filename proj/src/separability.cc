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

#include "witnesslab/separability.h"

#include <bit>
#include <cmath>
#include <random>

#include <Eigen/SVD>

#include "witnesslab/errors.h"
#include "witnesslab/pauli.h"
#include "witnesslab/states.h"

namespace witnesslab {

namespace {

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

Matrix matricize(const StateVector &target, std::uint64_t left_mask) {
    unsigned n = target.num_qubits();
    std::uint64_t all = (std::uint64_t{1} << n) - 1;
    if (left_mask == 0 || (left_mask & ~all) || left_mask == all) {
        throw DimensionError("cut must leave qubits on both sides");
    }
    std::uint64_t right_mask = all & ~left_mask;
    auto rows = Eigen::Index{1} << std::popcount(left_mask);
    auto cols = Eigen::Index{1} << std::popcount(right_mask);
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < cols; r++) {
        std::uint64_t right_bits = deposit(static_cast<std::uint64_t>(r), right_mask);
        for (Eigen::Index l = 0; l < rows; l++) {
            m(l, r) = target[deposit(static_cast<std::uint64_t>(l), left_mask) | right_bits];
        }
    }
    return m;
}

std::string qubit_list(std::uint64_t mask, const QubitIndexMap &map) {
    std::string out;
    for (std::uint64_t m = mask; m; m &= m - 1) {
        if (!out.empty()) {
            out += ',';
        }
        out += map.label(static_cast<unsigned>(std::countr_zero(m)));
    }
    return out;
}

/// Picks the larger value; near-ties (1e-12) go to the lexicographically smaller label.
bool better(double value, const Bipartition &p, double best_value, const Bipartition &best) {
    if (value > best_value + 1e-12) {
        return true;
    }
    return std::abs(value - best_value) <= 1e-12 && p.label() < best.label();
}

class GaussianSource {
   public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {
    }
    double uniform() {
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }
    // Box-Muller; both draws are consumed per call.
    Complex complex_normal() {
        double u1 = 1.0 - uniform();
        double u2 = uniform();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * M_PI * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

   private:
    std::mt19937_64 rng_;
};

}  // namespace

std::string Bipartition::label() const {
    QubitIndexMap map(n_dofs);
    if (dof == 0) {
        return "A|B";
    }
    std::uint64_t pair = (std::uint64_t{1} << map.qubit(dof, Particle::A)) |
                         (std::uint64_t{1} << map.qubit(dof, Particle::B));
    return "j=" + std::to_string(dof) + ";I=" + qubit_list(left_mask & ~pair, map) +
           ";J=" + qubit_list(right_mask & ~pair, map);
}

unsigned Bipartition::split_pairs() const {
    unsigned count = 0;
    for (unsigned j = 0; j < n_dofs; j++) {
        bool a_left = (left_mask >> (2 * j)) & 1;
        bool b_left = (left_mask >> (2 * j + 1)) & 1;
        count += a_left != b_left;
    }
    return count;
}

Bipartition Bipartition::particle_cut(unsigned n_dofs) {
    QubitIndexMap map(n_dofs);
    std::uint64_t a_mask = 0;
    for (unsigned j = 1; j <= n_dofs; j++) {
        a_mask |= std::uint64_t{1} << map.qubit(j, Particle::A);
    }
    std::uint64_t all = (std::uint64_t{1} << map.num_qubits()) - 1;
    return Bipartition{n_dofs, 0, a_mask, all & ~a_mask};
}

std::vector<Bipartition> enumerate_partitions(unsigned n_dofs) {
    QubitIndexMap map(n_dofs);
    if (map.num_qubits() > 30) {
        throw CapacityError("partition enumeration is limited to 15 DOFs");
    }
    std::uint64_t all = (std::uint64_t{1} << map.num_qubits()) - 1;
    std::vector<Bipartition> out;
    for (unsigned j = 1; j <= n_dofs; j++) {
        std::uint64_t a = std::uint64_t{1} << map.qubit(j, Particle::A);
        std::uint64_t b = std::uint64_t{1} << map.qubit(j, Particle::B);
        std::uint64_t rest = all & ~(a | b);
        std::uint64_t splits = std::uint64_t{1} << std::popcount(rest);
        for (std::uint64_t k = 0; k < splits; k++) {
            std::uint64_t in_i = deposit(k, rest);
            out.push_back(Bipartition{n_dofs, j, a | in_i, b | (rest & ~in_i)});
        }
    }
    return out;
}

double max_overlap_svd(const StateVector &target, std::uint64_t left_mask) {
    Matrix m = matricize(target, left_mask);
    Eigen::JacobiSVD<Matrix> svd(m);
    double top = svd.singularValues()(0);
    return top * top;
}

double max_overlap_svd(const StateVector &target, const Bipartition &partition) {
    if (target.num_qubits() != 2 * partition.n_dofs) {
        throw DimensionError("partition and state sizes differ");
    }
    return max_overlap_svd(target, partition.left_mask);
}

StateVector embed_product(const Amplitudes &left, const Amplitudes &right, std::uint64_t left_mask,
                          unsigned n_qubits) {
    std::uint64_t all = (std::uint64_t{1} << n_qubits) - 1;
    std::uint64_t right_mask = all & ~left_mask;
    if (left.size() != (Eigen::Index{1} << std::popcount(left_mask)) ||
        right.size() != (Eigen::Index{1} << std::popcount(right_mask))) {
        throw DimensionError("factor sizes do not match the cut");
    }
    Amplitudes amps(Eigen::Index{1} << n_qubits);
    for (Eigen::Index r = 0; r < right.size(); r++) {
        std::uint64_t right_bits = deposit(static_cast<std::uint64_t>(r), right_mask);
        for (Eigen::Index l = 0; l < left.size(); l++) {
            amps[static_cast<Eigen::Index>(deposit(static_cast<std::uint64_t>(l), left_mask) | right_bits)] =
                left[l] * right[r];
        }
    }
    return StateVector::normalized(n_qubits, std::move(amps));
}

OverlapBoundReport verify_overlap_bound(unsigned n_dofs, const DenseLimits &limits) {
    StateVector xi = build_he_state(n_dofs, limits);
    OverlapBoundReport report{};
    report.result = OracleResult{-1.0, Bipartition{}, OracleMethod::Svd, 0};
    for (const auto &p : enumerate_partitions(n_dofs)) {
        double v = max_overlap_svd(xi, p);
        report.per_partition.push_back(PartitionValue{p, v, 0});
        if (report.result.max_overlap_sq < 0 ||
            better(v, p, report.result.max_overlap_sq, report.result.argmax_partition)) {
            report.result.max_overlap_sq = v;
            report.result.argmax_partition = p;
        }
    }
    report.bound_holds = report.result.max_overlap_sq <= 0.5 + 1e-9;

    const Bipartition &best = report.result.argmax_partition;
    StateVector saturating = build_saturating_state(n_dofs, best.dof, limits);
    report.saturating_confirmed = std::abs(xi.overlap_sq(saturating) - report.result.max_overlap_sq) < 1e-9 &&
                                  std::abs(max_overlap_svd(saturating, best) - 1.0) < 1e-9;
    return report;
}

OracleResult search_overlap(const StateVector &target, const Bipartition &partition, const SearchOptions &options) {
    if (options.restarts == 0) {
        throw DomainError("search needs at least one restart");
    }
    if (target.num_qubits() != 2 * partition.n_dofs) {
        throw DimensionError("partition and state sizes differ");
    }
    // <target| phi_L phi_R> = phi_L^T conj(M) phi_R.
    Matrix conj_m = matricize(target, partition.left_mask).conjugate();
    GaussianSource gauss(options.seed);
    OracleResult result{0.0, partition, OracleMethod::Search, 0};

    for (unsigned restart = 0; restart < options.restarts; restart++) {
        Amplitudes right(conj_m.cols());
        for (Eigen::Index k = 0; k < right.size(); k++) {
            right[k] = gauss.complex_normal();
        }
        right.normalize();
        Amplitudes left(conj_m.rows());
        double previous = -1.0;
        for (unsigned it = 0; it < options.max_iterations; it++) {
            Amplitudes a = conj_m * right;
            double na = a.norm();
            if (na == 0.0) {
                break;  // started orthogonal to the support; next restart
            }
            left = a.conjugate() / na;
            Amplitudes b = conj_m.transpose() * left;
            double nb = b.norm();
            right = b.conjugate() / nb;
            double overlap = nb * nb;
            result.iterations++;
            if (options.on_iterate) {
                options.on_iterate(left, right, overlap);
            }
            if (std::abs(overlap - previous) < options.tolerance) {
                previous = overlap;
                break;
            }
            previous = overlap;
        }
        result.max_overlap_sq = std::max(result.max_overlap_sq, previous);
    }
    return result;
}

OverlapBoundReport search_overlap_bound(unsigned n_dofs, const SearchOptions &options, const DenseLimits &limits) {
    StateVector xi = build_he_state(n_dofs, limits);
    OverlapBoundReport report{};
    report.result = OracleResult{-1.0, Bipartition{}, OracleMethod::Search, 0};
    for (const auto &p : enumerate_partitions(n_dofs)) {
        OracleResult r = search_overlap(xi, p, options);
        report.per_partition.push_back(PartitionValue{p, r.max_overlap_sq, r.iterations});
        report.result.iterations += r.iterations;
        if (report.result.max_overlap_sq < 0 ||
            better(r.max_overlap_sq, p, report.result.max_overlap_sq, report.result.argmax_partition)) {
            report.result.max_overlap_sq = r.max_overlap_sq;
            report.result.argmax_partition = p;
        }
    }
    report.bound_holds = report.result.max_overlap_sq <= 0.5 + 1e-9;
    const Bipartition &best = report.result.argmax_partition;
    StateVector saturating = build_saturating_state(n_dofs, best.dof, limits);
    report.saturating_confirmed = std::abs(xi.overlap_sq(saturating) - report.result.max_overlap_sq) < 1e-6 &&
                                  std::abs(max_overlap_svd(saturating, best) - 1.0) < 1e-9;
    return report;
}

double qudit_overlap_bound(unsigned n_dofs, const DenseLimits &limits) {
    StateVector xi = build_he_state(n_dofs, limits);
    return max_overlap_svd(xi, Bipartition::particle_cut(n_dofs));
}

}  // namespace witnesslab
