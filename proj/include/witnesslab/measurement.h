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

#ifndef WITNESSLAB_MEASUREMENT_H
#define WITNESSLAB_MEASUREMENT_H

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "witnesslab/pauli.h"
#include "witnesslab/quantum_state.h"
#include "witnesslab/rational.h"
#include "witnesslab/witness.h"

namespace witnesslab {

/// Identifier of the generator behind sample(): std::mt19937_64 seeded with
/// the given seed, uniforms taken as (x >> 11) * 2^-53 and outcomes drawn by
/// inverse CDF over outcome indices in ascending order.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64";

/// One single-qubit basis per qubit, measured simultaneously. Outcome bit k
/// is 1 when qubit k reads the -1 eigenvalue of its basis operator.
class MeasurementSetting {
   public:
    /// Letters X, Y or Z, one per qubit.
    explicit MeasurementSetting(std::string bases);

    unsigned num_qubits() const {
        return static_cast<unsigned>(bases_.size());
    }
    char basis(unsigned qubit) const {
        return bases_.at(qubit);
    }
    const std::string &str() const {
        return bases_;
    }
    /// True when every non-identity factor of p matches the basis on its qubit.
    bool measures(const PauliString &p) const;

    friend bool operator==(const MeasurementSetting &, const MeasurementSetting &) = default;
    friend auto operator<=>(const MeasurementSetting &, const MeasurementSetting &) = default;

   private:
    std::string bases_;
};

/// coefficient * prod_{k in mask} S_k, where the stabilizer product equals
/// sign * (letter form of `pauli`).
struct MeasuredTerm {
    std::uint64_t stabilizer_mask;
    PauliString pauli;
    Rational coefficient;
    int sign;

    /// Coefficient of the letter-form Pauli operator.
    double weight() const {
        return to_double(coefficient) * sign;
    }
};

struct SettingGroup {
    MeasurementSetting setting;
    std::vector<MeasuredTerm> terms;
};

struct Decomposition {
    Rational identity_coefficient;
    std::vector<SettingGroup> groups;
    /// Distinct Pauli patterns in the expansion (identity included), i.e. the
    /// setting count before identity factors are absorbed.
    std::size_t naive_count;

    std::size_t num_settings() const {
        return groups.size();
    }
    std::size_t num_terms() const;
};

/// Expands the witness over stabilizer products and greedily packs the terms
/// into local settings, heaviest terms first. Each term lands in exactly one
/// setting; identity factors are absorbed by whichever setting takes the term.
/// N <= 16.
Decomposition decompose(const WitnessSpec &spec);

struct SampleRecord {
    MeasurementSetting setting;
    std::map<std::string, std::uint64_t> counts;  // outcome bit-string (char k = qubit k) -> count
    std::uint64_t shots;

    /// Counts sum to shots and every key is an N-character 0/1 string.
    void validate() const;

    nlohmann::ordered_json to_json() const;
    static SampleRecord from_json(const nlohmann::ordered_json &j);
};

/// One JSON object per line.
void write_json_lines(std::ostream &out, std::span<const SampleRecord> records);
std::vector<SampleRecord> read_json_lines(std::istream &in);

std::string outcome_string(std::uint64_t outcome, unsigned n_qubits);
std::uint64_t outcome_bits(std::string_view outcome);

/// Born-rule distribution over outcomes (indexed by outcome bits) in the
/// rotated product basis of the setting.
std::vector<double> outcome_probabilities(const StateVector &state, const MeasurementSetting &setting);
std::vector<double> outcome_probabilities(const DensityOperator &rho, const MeasurementSetting &setting);
/// (1-p) probs + p/D: the distribution of the white-noised state.
std::vector<double> mix_with_uniform(std::span<const double> probs, double p_noise);

/// Draws `shots` outcomes. Deterministic in (distribution, setting, shots, seed).
/// Throws DomainError for zero shots.
SampleRecord sample_distribution(std::span<const double> probs, const MeasurementSetting &setting,
                                 std::uint64_t shots, std::uint64_t seed);
SampleRecord sample(const StateVector &state, const MeasurementSetting &setting, std::uint64_t shots,
                    std::uint64_t seed);
SampleRecord sample(const DensityOperator &rho, const MeasurementSetting &setting, std::uint64_t shots,
                    std::uint64_t seed);

struct Estimate {
    double value;
    double std_error;
};

/// Plug-in estimate from counts. Each term of the decomposition is read from
/// the first record whose setting measures it (records sharing a setting are
/// pooled). Per-setting variance uses the empirical covariance of the term
/// parities; settings are treated as independent. Throws CoverageError if a
/// term has no compatible record.
Estimate estimate(const WitnessSpec &spec, std::span<const SampleRecord> records);

/// Exact outcome distribution for one setting.
struct OutcomeDistribution {
    MeasurementSetting setting;
    std::vector<double> probabilities;
};

/// Infinite-shot limit of estimate(): std_error is 0.
Estimate estimate(const WitnessSpec &spec, std::span<const OutcomeDistribution> distributions);

}  // namespace witnesslab

#endif
