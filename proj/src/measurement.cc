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

#include "witnesslab/measurement.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

#include "witnesslab/errors.h"
#include "witnesslab/states.h"

namespace witnesslab {

namespace {

int parity(std::uint64_t bits) {
    return std::popcount(bits) & 1;
}

/// Maps the eigenbasis of the measured operator onto the computational basis.
Gate1 rotation_for(char basis) {
    const double r = 0.70710678118654752440;
    Gate1 g;
    switch (basis) {
        case 'X':
            g << r, r, r, -r;  // H
            break;
        case 'Y':
            g << Complex(r, 0), Complex(0, -r), Complex(r, 0), Complex(0, r);  // H S^dagger
            break;
        default:
            g = Gate1::Identity();
            break;
    }
    return g;
}

bool compatible(const std::string &partial, const std::string &letters) {
    for (size_t k = 0; k < letters.size(); k++) {
        if (letters[k] != 'I' && partial[k] != 'I' && partial[k] != letters[k]) {
            return false;
        }
    }
    return true;
}

struct WeightedOutcomes {
    MeasurementSetting setting;
    std::vector<std::pair<std::uint64_t, double>> outcomes;
    double total = 0;
    std::vector<const MeasuredTerm *> terms;
};

Estimate estimate_pooled(const Decomposition &dec, std::vector<WeightedOutcomes> &pooled, bool finite) {
    for (const auto &group : dec.groups) {
        for (const auto &term : group.terms) {
            auto it = std::find_if(pooled.begin(), pooled.end(),
                                   [&](const WeightedOutcomes &w) { return w.setting.measures(term.pauli); });
            if (it == pooled.end()) {
                throw CoverageError("no record measures term " + term.pauli.str() + " (setting " +
                                    group.setting.str() + " or a compatible one is missing)");
            }
            it->terms.push_back(&term);
        }
    }
    double value = to_double(dec.identity_coefficient);
    double variance = 0;
    for (const auto &w : pooled) {
        if (w.terms.empty()) {
            continue;
        }
        if (w.total <= 0) {
            throw DomainError("record for setting " + w.setting.str() + " is empty");
        }
        std::vector<double> per_outcome;
        per_outcome.reserve(w.outcomes.size());
        double mean = 0;
        for (auto [bits, weight] : w.outcomes) {
            double v = 0;
            for (const MeasuredTerm *t : w.terms) {
                double c = t->weight();
                v += parity(bits & t->pauli.support()) ? -c : c;
            }
            per_outcome.push_back(v);
            mean += weight * v;
        }
        mean /= w.total;
        value += mean;
        if (finite) {
            double ss = 0;
            for (size_t k = 0; k < per_outcome.size(); k++) {
                double d = per_outcome[k] - mean;
                ss += w.outcomes[k].second * d * d;
            }
            double sample_var = w.total > 1 ? ss / (w.total - 1) : 0.0;
            variance += sample_var / w.total;
        }
    }
    return Estimate{value, std::sqrt(variance)};
}

}  // namespace

MeasurementSetting::MeasurementSetting(std::string bases) : bases_(std::move(bases)) {
    if (bases_.empty() || bases_.size() > kMaxPauliQubits) {
        throw ValidationError("measurement setting needs 1.." + std::to_string(kMaxPauliQubits) + " bases");
    }
    for (char c : bases_) {
        if (c != 'X' && c != 'Y' && c != 'Z') {
            throw ValidationError("bad measurement basis '" + std::string(1, c) + "' in setting " + bases_);
        }
    }
}

bool MeasurementSetting::measures(const PauliString &p) const {
    if (p.num_qubits() != num_qubits()) {
        throw DimensionError("setting and Pauli string sizes differ");
    }
    for (unsigned k = 0; k < num_qubits(); k++) {
        char l = p.letter(k);
        if (l != 'I' && l != bases_[k]) {
            return false;
        }
    }
    return true;
}

std::size_t Decomposition::num_terms() const {
    std::size_t total = 0;
    for (const auto &g : groups) {
        total += g.terms.size();
    }
    return total;
}

Decomposition decompose(const WitnessSpec &spec) {
    const StabilizerSet &sys = spec.system();
    std::vector<Rational> coeffs = stabilizer_expansion(DiagonalWitness(spec));

    Decomposition dec{0, {}, 0};
    std::set<std::string> patterns;
    std::vector<MeasuredTerm> terms;
    for (std::uint64_t m = 0; m < coeffs.size(); m++) {
        if (coeffs[m] == 0) {
            continue;
        }
        PauliString p = sys.product(m);
        patterns.insert(p.letters());
        if (m == 0) {
            dec.identity_coefficient = coeffs[m];
            continue;
        }
        terms.push_back(MeasuredTerm{m, p, coeffs[m], p.letter_sign()});
    }
    dec.naive_count = patterns.size();

    std::stable_sort(terms.begin(), terms.end(),
                     [](const MeasuredTerm &a, const MeasuredTerm &b) { return a.pauli.weight() > b.pauli.weight(); });

    std::vector<std::string> partial;
    std::vector<std::vector<MeasuredTerm>> grouped;
    for (auto &term : terms) {
        std::string letters = term.pauli.letters();
        size_t g = 0;
        while (g < partial.size() && !compatible(partial[g], letters)) {
            g++;
        }
        if (g == partial.size()) {
            partial.emplace_back(letters.size(), 'I');
            grouped.emplace_back();
        }
        for (size_t k = 0; k < letters.size(); k++) {
            if (letters[k] != 'I') {
                partial[g][k] = letters[k];
            }
        }
        grouped[g].push_back(std::move(term));
    }
    for (size_t g = 0; g < partial.size(); g++) {
        std::replace(partial[g].begin(), partial[g].end(), 'I', 'Z');
        dec.groups.push_back(SettingGroup{MeasurementSetting(partial[g]), std::move(grouped[g])});
    }
    return dec;
}

void SampleRecord::validate() const {
    std::uint64_t total = 0;
    for (const auto &[outcome, count] : counts) {
        if (outcome.size() != setting.num_qubits() ||
            outcome.find_first_not_of("01") != std::string::npos) {
            throw ValidationError("outcome '" + outcome + "' is not a " + std::to_string(setting.num_qubits()) +
                                  "-bit string");
        }
        total += count;
    }
    if (total != shots) {
        throw ValidationError("counts sum to " + std::to_string(total) + " but shots = " + std::to_string(shots));
    }
}

nlohmann::ordered_json SampleRecord::to_json() const {
    nlohmann::ordered_json j;
    j["setting"] = setting.str();
    j["shots"] = shots;
    nlohmann::ordered_json c = nlohmann::ordered_json::object();
    for (const auto &[outcome, count] : counts) {
        c[outcome] = count;
    }
    j["counts"] = std::move(c);
    return j;
}

SampleRecord SampleRecord::from_json(const nlohmann::ordered_json &j) {
    try {
        SampleRecord r{MeasurementSetting(j.at("setting").get<std::string>()), {}, j.at("shots").get<std::uint64_t>()};
        for (const auto &[outcome, count] : j.at("counts").items()) {
            r.counts[outcome] = count.get<std::uint64_t>();
        }
        r.validate();
        return r;
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("malformed sample record: ") + e.what());
    }
}

void write_json_lines(std::ostream &out, std::span<const SampleRecord> records) {
    for (const auto &r : records) {
        out << r.to_json().dump() << '\n';
    }
}

std::vector<SampleRecord> read_json_lines(std::istream &in) {
    std::vector<SampleRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        nlohmann::ordered_json j;
        try {
            j = nlohmann::ordered_json::parse(line);
        } catch (const nlohmann::json::exception &e) {
            throw ValidationError(std::string("malformed JSON line: ") + e.what());
        }
        records.push_back(SampleRecord::from_json(j));
    }
    return records;
}

std::string outcome_string(std::uint64_t outcome, unsigned n_qubits) {
    std::string s(n_qubits, '0');
    for (unsigned k = 0; k < n_qubits; k++) {
        if ((outcome >> k) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

std::uint64_t outcome_bits(std::string_view outcome) {
    std::uint64_t bits = 0;
    for (size_t k = 0; k < outcome.size(); k++) {
        if (outcome[k] == '1') {
            bits |= std::uint64_t{1} << k;
        } else if (outcome[k] != '0') {
            throw ValidationError("bad outcome string '" + std::string(outcome) + "'");
        }
    }
    return bits;
}

std::vector<double> outcome_probabilities(const StateVector &state, const MeasurementSetting &setting) {
    if (state.num_qubits() != setting.num_qubits()) {
        throw DimensionError("setting and state act on different qubit counts");
    }
    StateVector rotated = state;
    for (unsigned k = 0; k < setting.num_qubits(); k++) {
        if (setting.basis(k) != 'Z') {
            rotated = apply_gate(rotated, k, rotation_for(setting.basis(k)));
        }
    }
    std::vector<double> probs(rotated.dimension());
    for (std::uint64_t b = 0; b < probs.size(); b++) {
        probs[b] = std::norm(rotated[b]);
    }
    return probs;
}

std::vector<double> outcome_probabilities(const DensityOperator &rho, const MeasurementSetting &setting) {
    if (rho.num_qubits() != setting.num_qubits()) {
        throw DimensionError("setting and state act on different qubit counts");
    }
    Matrix m = rho.matrix();
    for (unsigned k = 0; k < setting.num_qubits(); k++) {
        if (setting.basis(k) != 'Z') {
            Gate1 g = rotation_for(setting.basis(k));
            // U rho U^dagger = U (U rho)^dagger for Hermitian rho.
            m = apply_gate_left(m, k, g);
            m = apply_gate_left(Matrix(m.adjoint()), k, g);
        }
    }
    std::vector<double> probs(rho.dimension());
    for (std::uint64_t b = 0; b < probs.size(); b++) {
        probs[b] = std::max(0.0, m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)).real());
    }
    return probs;
}

std::vector<double> mix_with_uniform(std::span<const double> probs, double p_noise) {
    if (!(p_noise >= 0.0 && p_noise <= 1.0)) {
        throw DomainError("noise probability must lie in [0, 1]");
    }
    double flat = p_noise / static_cast<double>(probs.size());
    std::vector<double> out(probs.size());
    for (size_t k = 0; k < probs.size(); k++) {
        out[k] = (1.0 - p_noise) * probs[k] + flat;
    }
    return out;
}

SampleRecord sample_distribution(std::span<const double> probs, const MeasurementSetting &setting,
                                 std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw DomainError("shots must be positive");
    }
    if (probs.size() != (std::size_t{1} << setting.num_qubits())) {
        throw DimensionError("distribution size does not match the setting");
    }
    std::vector<double> cumulative(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cumulative.begin());
    double total = cumulative.back();
    if (!(total > 0)) {
        throw DomainError("distribution has no mass");
    }

    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> tally(probs.size(), 0);
    for (std::uint64_t shot = 0; shot < shots; shot++) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        auto index = static_cast<std::size_t>(std::min<std::ptrdiff_t>(it - cumulative.begin(),
                                                                       static_cast<std::ptrdiff_t>(probs.size()) - 1));
        // Never land on a zero-probability outcome through round-off at the top end.
        while (probs[index] == 0.0 && index > 0) {
            index--;
        }
        tally[index]++;
    }

    SampleRecord record{setting, {}, shots};
    for (std::uint64_t b = 0; b < tally.size(); b++) {
        if (tally[b]) {
            record.counts[outcome_string(b, setting.num_qubits())] = tally[b];
        }
    }
    return record;
}

SampleRecord sample(const StateVector &state, const MeasurementSetting &setting, std::uint64_t shots,
                    std::uint64_t seed) {
    if (shots == 0) {
        throw DomainError("shots must be positive");
    }
    return sample_distribution(outcome_probabilities(state, setting), setting, shots, seed);
}

SampleRecord sample(const DensityOperator &rho, const MeasurementSetting &setting, std::uint64_t shots,
                    std::uint64_t seed) {
    if (shots == 0) {
        throw DomainError("shots must be positive");
    }
    return sample_distribution(outcome_probabilities(rho, setting), setting, shots, seed);
}

Estimate estimate(const WitnessSpec &spec, std::span<const SampleRecord> records) {
    Decomposition dec = decompose(spec);
    std::vector<WeightedOutcomes> pooled;
    for (const auto &r : records) {
        r.validate();
        if (r.setting.num_qubits() != spec.num_qubits()) {
            throw DimensionError("record setting " + r.setting.str() + " does not match the witness size");
        }
        auto it = std::find_if(pooled.begin(), pooled.end(), [&](const WeightedOutcomes &w) { return w.setting == r.setting; });
        if (it == pooled.end()) {
            pooled.push_back(WeightedOutcomes{r.setting, {}, 0, {}});
            it = pooled.end() - 1;
        }
        for (const auto &[outcome, count] : r.counts) {
            it->outcomes.emplace_back(outcome_bits(outcome), static_cast<double>(count));
        }
        it->total += static_cast<double>(r.shots);
    }
    return estimate_pooled(dec, pooled, true);
}

Estimate estimate(const WitnessSpec &spec, std::span<const OutcomeDistribution> distributions) {
    Decomposition dec = decompose(spec);
    std::vector<WeightedOutcomes> pooled;
    for (const auto &d : distributions) {
        if (d.probabilities.size() != (std::size_t{1} << d.setting.num_qubits()) ||
            d.setting.num_qubits() != spec.num_qubits()) {
            throw DimensionError("distribution does not match the witness size");
        }
        WeightedOutcomes w{d.setting, {}, 0, {}};
        for (std::uint64_t b = 0; b < d.probabilities.size(); b++) {
            if (d.probabilities[b] != 0.0) {
                w.outcomes.emplace_back(b, d.probabilities[b]);
            }
            w.total += d.probabilities[b];
        }
        pooled.push_back(std::move(w));
    }
    return estimate_pooled(dec, pooled, false);
}

}  // namespace witnesslab
