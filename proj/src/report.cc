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

#include "witnesslab/report.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "witnesslab/errors.h"
#include "witnesslab/graph.h"
#include "witnesslab/measurement.h"
#include "witnesslab/separability.h"
#include "witnesslab/states.h"

namespace witnesslab {

using nlohmann::ordered_json;

namespace {

constexpr unsigned kEvalDenseMaxQubits = 10;

std::string cell_text(const ordered_json &v) {
    if (v.is_null()) {
        return "";
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    return v.dump();
}

std::vector<std::string> column_names(const std::vector<ordered_json> &rows) {
    std::vector<std::string> names;
    for (const auto &row : rows) {
        for (const auto &item : row.items()) {
            if (std::find(names.begin(), names.end(), item.key()) == names.end()) {
                names.push_back(item.key());
            }
        }
    }
    return names;
}

ordered_json optional_rational(const std::optional<Rational> &r) {
    return r ? ordered_json(to_string(*r)) : ordered_json(nullptr);
}

ordered_json optional_float(const std::optional<Rational> &r) {
    return r ? ordered_json(to_double(*r)) : ordered_json(nullptr);
}

std::uint64_t parse_unsigned(std::string_view text, std::string_view what) {
    std::uint64_t value = 0;
    if (text.empty()) {
        throw ValidationError("missing " + std::string(what));
    }
    for (char c : text) {
        if (c < '0' || c > '9' || value > (UINT64_MAX - 9) / 10) {
            throw ValidationError("bad " + std::string(what) + ": " + std::string(text));
        }
        value = value * 10 + static_cast<unsigned>(c - '0');
    }
    return value;
}

WitnessSpec require_witness(const RunConfig &config, const StabilizerSet &system) {
    if (config.witness_id.empty()) {
        throw ValidationError("--witness is required");
    }
    return WitnessSpec::parse(config.witness_id, system);
}

/// Outcome distribution of the (optionally white-noised) state for one setting.
std::vector<double> noisy_probabilities(const ResolvedState &state, const MeasurementSetting &setting,
                                        double p_noise) {
    std::vector<double> probs = std::visit([&](const auto &s) { return outcome_probabilities(s, setting); }, state);
    return p_noise > 0 ? mix_with_uniform(probs, p_noise) : probs;
}

void check_noise(double p_noise) {
    if (!(p_noise >= 0.0 && p_noise <= 1.0)) {
        throw DomainError("noise fraction must lie in [0, 1]");
    }
}

std::vector<SampleRecord> draw_records(const Decomposition &dec, const ResolvedState &state, double p_noise,
                                       std::uint64_t shots, std::uint64_t seed) {
    std::vector<SampleRecord> records;
    for (std::size_t k = 0; k < dec.groups.size(); k++) {
        const MeasurementSetting &setting = dec.groups[k].setting;
        records.push_back(sample_distribution(noisy_probabilities(state, setting, p_noise), setting, shots, seed + k));
    }
    return records;
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "text") {
        return Format::Text;
    }
    if (name == "json") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    throw ValidationError("unknown format: " + std::string(name));
}

ordered_json Report::to_json() const {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["command"] = command;
    j["config"] = config;
    j["summary"] = summary;
    j["rows"] = rows;
    return j;
}

std::string render_json(const Report &report) {
    return report.to_json().dump(2) + "\n";
}

std::string csv_field(std::string_view value) {
    if (value.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(value);
    }
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string render_csv(const Report &report) {
    std::vector<std::string> names = column_names(report.rows);
    if (names.empty()) {
        // Header row is mandatory; fall back to the summary as a single row.
        std::vector<ordered_json> single{report.summary};
        Report copy = report;
        copy.rows = std::move(single);
        if (report.summary.empty()) {
            return "command\r\n" + csv_field(report.command) + "\r\n";
        }
        return render_csv(copy);
    }
    std::string out;
    for (std::size_t k = 0; k < names.size(); k++) {
        out += (k ? "," : "") + csv_field(names[k]);
    }
    out += "\r\n";
    for (const auto &row : report.rows) {
        for (std::size_t k = 0; k < names.size(); k++) {
            std::string value = row.contains(names[k]) ? cell_text(row[names[k]]) : "";
            out += (k ? "," : "") + csv_field(value);
        }
        out += "\r\n";
    }
    return out;
}

std::string render_text(const Report &report) {
    std::ostringstream out;
    out << "command: " << report.command << "\n";
    for (const auto &item : report.config.items()) {
        out << "  " << item.key() << ": " << cell_text(item.value()) << "\n";
    }
    for (const auto &item : report.summary.items()) {
        out << item.key() << ": " << cell_text(item.value()) << "\n";
    }
    std::vector<std::string> names = column_names(report.rows);
    if (names.empty()) {
        return out.str();
    }
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> widths;
    for (const auto &name : names) {
        widths.push_back(name.size());
    }
    for (const auto &row : report.rows) {
        std::vector<std::string> line;
        for (std::size_t k = 0; k < names.size(); k++) {
            line.push_back(row.contains(names[k]) ? cell_text(row[names[k]]) : "");
            widths[k] = std::max(widths[k], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string> &line) {
        std::string text;
        for (std::size_t k = 0; k < line.size(); k++) {
            text += line[k];
            if (k + 1 < line.size()) {
                text += std::string(widths[k] - line[k].size() + 2, ' ');
            }
        }
        out << text << "\n";
    };
    out << "\n";
    emit(names);
    for (const auto &line : cells) {
        emit(line);
    }
    return out.str();
}

std::string render(const Report &report, Format format) {
    switch (format) {
        case Format::Json:
            return render_json(report);
        case Format::Csv:
            return render_csv(report);
        case Format::Text:
            return render_text(report);
    }
    throw std::logic_error("unreachable");
}

// ---- table rows -------------------------------------------------------------

ordered_json ReportRow::to_json() const {
    ordered_json j;
    j["witness"] = witness_id(kind);
    j["N"] = n_qubits;
    j["system"] = system;
    j["D"] = dimension.str();
    j["trace"] = to_string(trace);
    j["trace_float"] = to_double(trace);
    j["bitstring_trace"] = optional_rational(bitstring_trace);
    j["dense_trace"] = dense_trace ? ordered_json(*dense_trace) : ordered_json(nullptr);
    j["p_max"] = to_string(p_max);
    j["p_max_float"] = to_double(p_max);
    j["p_max_printed"] = optional_rational(p_max_printed);
    j["p_max_printed_float"] = optional_float(p_max_printed);
    j["settings_count"] = settings_count ? ordered_json(*settings_count) : ordered_json(nullptr);
    j["notes"] = notes;
    return j;
}

std::vector<ReportRow> table1_rows(unsigned n_min, unsigned n_max, const Table1Options &options) {
    if (n_min < 1 || n_min > n_max) {
        throw ValidationError("need 1 <= n-min <= n-max");
    }
    if (n_max > 30) {
        throw CapacityError("closed forms are evaluated up to n = 30 (N = 61)");
    }
    const WitnessKind kinds[] = {WitnessKind::Wtilde, WitnessKind::W1, WitnessKind::W2, WitnessKind::W3};
    std::vector<ReportRow> rows;
    for (unsigned n = n_min; n <= n_max; n++) {
        for (unsigned big_n : {2 * n, 2 * n + 1}) {
            StabilizerSet system =
                big_n % 2 == 0 ? StabilizerSet::hyperentangled(n) : StabilizerSet::graph(GraphSpec::path(big_n));
            for (WitnessKind kind : kinds) {
                WitnessSpec spec(kind, system);
                ReportRow row{kind,  big_n, system.label(), pow_int(2, big_n), closed_form_trace(kind, big_n),
                              {},    {},    noise_threshold(kind, big_n),     printed_noise_threshold(kind, big_n),
                              {},    ""};
                if (big_n <= options.bitstring_max_qubits) {
                    row.bitstring_trace = bitstring_trace(build_diagonal(spec), options.bitstring_max_qubits);
                    if (*row.bitstring_trace != row.trace) {
                        throw ConsistencyError("bit-string trace disagrees with the closed form for " + spec.id() +
                                               " at N=" + std::to_string(big_n));
                    }
                }
                if (big_n <= options.dense_max_qubits) {
                    row.dense_trace = dense_trace(spec);
                    double exact = to_double(row.trace);
                    if (std::abs(*row.dense_trace - exact) > 1e-9 * std::max(1.0, std::abs(exact))) {
                        throw ConsistencyError("dense trace disagrees with the closed form for " + spec.id() +
                                               " at N=" + std::to_string(big_n));
                    }
                }
                if (big_n <= options.settings_max_qubits) {
                    row.settings_count = decompose(spec).num_settings();
                }
                if (row.p_max_printed && *row.p_max_printed != row.p_max) {
                    row.notes = "printed cell " + to_string(*row.p_max_printed) + " differs from D/(Tr+D) = " +
                                to_string(row.p_max);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

// ---- resolution -------------------------------------------------------------

NamedState resolve_state(std::string_view id) {
    std::string text(id);
    if (text == "psi1" || text == "psi2" || text == "rhoprime") {
        ExampleStates ex = build_example_states();
        StabilizerSet system = StabilizerSet::hyperentangled(2);
        if (text == "psi1") {
            return NamedState{text, system, ex.psi1, false};
        }
        if (text == "psi2") {
            return NamedState{text, system, ex.psi2, false};
        }
        return NamedState{text, system, ex.rho_prime, false};
    }
    if (text.rfind("he:n=", 0) == 0) {
        auto n = parse_unsigned(std::string_view(text).substr(5), "DOF count");
        if (n == 0 || n > 31) {
            throw ValidationError("DOF count must be in 1..31");
        }
        StabilizerSet system = StabilizerSet::hyperentangled(static_cast<unsigned>(n));
        return NamedState{system.label(), system, build_he_state(static_cast<unsigned>(n)), true};
    }
    if (text.rfind("graph:", 0) == 0) {
        GraphSpec graph = GraphSpec::parse(std::string_view(text).substr(6));
        StateVector state = build_graph_state(graph);
        StabilizerSet system = StabilizerSet::graph(graph);
        return NamedState{system.label(), system, std::move(state), true};
    }
    throw ValidationError("unknown state: " + text);
}

StabilizerSet resolve_system(const RunConfig &config) {
    if (config.n != 0 && !config.graph.empty()) {
        throw ValidationError("--n and --graph are exclusive");
    }
    if (config.n != 0) {
        if (config.n > 31) {
            throw ValidationError("DOF count must be in 1..31");
        }
        return StabilizerSet::hyperentangled(config.n);
    }
    if (!config.graph.empty()) {
        return StabilizerSet::graph(GraphSpec::parse(config.graph));
    }
    if (!config.state_id.empty()) {
        return resolve_state(config.state_id).system;
    }
    throw ValidationError("one of --n, --graph or --state is required");
}

// ---- commands ---------------------------------------------------------------

Report cmd_table1(const RunConfig &config) {
    Report report;
    report.command = "table1";
    report.config["n_min"] = config.n_min;
    report.config["n_max"] = config.n_max;
    for (const auto &row : table1_rows(config.n_min, config.n_max)) {
        report.rows.push_back(row.to_json());
    }
    return report;
}

Report cmd_eval(const RunConfig &config) {
    if (config.state_id.empty()) {
        throw ValidationError("--state is required");
    }
    check_noise(config.p_noise);
    NamedState named = resolve_state(config.state_id);
    StabilizerSet system = config.n != 0 || !config.graph.empty() ? resolve_system(config) : named.system;
    unsigned n = system.num_qubits();
    if (std::visit([](const auto &s) { return s.num_qubits(); }, named.state) != n) {
        throw DimensionError("state and system sizes differ");
    }
    WitnessSpec spec = require_witness(config, system);

    ResolvedState state = named.state;
    if (config.p_noise > 0) {
        state = std::visit([&](const auto &s) { return add_white_noise(s, config.p_noise); }, named.state);
    }

    Report report;
    report.command = "eval";
    report.config["state"] = named.id;
    report.config["system"] = system.label();
    report.config["witness"] = spec.id();
    report.config["p_noise"] = config.p_noise;
    report.config["shots"] = config.shots;
    report.config["seed"] = config.seed;

    // Every witness here is diagonal in the stabilizer basis of its system.
    double diagonal = expectation_diagonal(
        build_diagonal(spec), std::visit([&](const auto &s) { return stabilizer_populations(system, s); }, state));
    ordered_json row;
    row["exact"] = diagonal;
    row["dense"] = nullptr;
    if (n <= kEvalDenseMaxQubits) {
        double dense = std::visit([&](const auto &s) { return expectation(spec, s); }, state);
        row["dense"] = dense;
        if (std::abs(dense - diagonal) > 1e-9) {
            throw ConsistencyError("dense and diagonal expectations disagree: " + std::to_string(dense) + " vs " +
                                   std::to_string(diagonal));
        }
    }
    row["closed_form"] = nullptr;
    if (named.is_target && spec.is_normalized() && system.label() == named.system.label()) {
        row["closed_form"] = noisy_expectation(spec.kind(), n, config.p_noise);
    }
    row["sampled"] = nullptr;
    row["std_error"] = nullptr;
    if (config.shots > 0 || !config.records_path.empty()) {
        std::vector<SampleRecord> records;
        if (!config.records_path.empty()) {
            std::ifstream in(config.records_path);
            if (!in) {
                throw ValidationError("cannot read " + config.records_path);
            }
            records = read_json_lines(in);
        } else {
            records = draw_records(decompose(spec), state, 0.0, config.shots, config.seed);
        }
        Estimate est = estimate(spec, records);
        row["sampled"] = est.value;
        row["std_error"] = est.std_error;
    }
    row["verdict"] = nullptr;
    if (system.is_hyperentangled()) {
        WitnessSpec main = spec;
        if (spec.kind() == WitnessKind::PerDof || spec.kind() == WitnessKind::PerDofAlt ||
            spec.kind() == WitnessKind::QuditBipartite) {
            main = WitnessSpec(WitnessKind::Wtilde, system);
        }
        DetectionReport det = std::visit([&](const auto &s) { return detect_hyperentanglement(s, main); }, state);
        row["detection_witness"] = main.id();
        row["detection_value"] = det.main_value;
        row["per_dof"] = det.per_dof;
        row["verdict"] = det.verdict();
    }
    report.rows.push_back(std::move(row));
    return report;
}

Report cmd_oracle(const RunConfig &config) {
    unsigned n = config.n;
    if (n == 0) {
        throw ValidationError("--n is required");
    }
    Report report;
    report.command = "oracle";
    report.config["n"] = n;
    report.config["method"] = config.method;
    OverlapBoundReport result;
    if (config.method == "svd") {
        if (n > 6) {
            throw CapacityError("svd oracle is limited to n <= 6");
        }
        result = verify_overlap_bound(n);
    } else if (config.method == "search") {
        if (n > 4) {
            throw CapacityError("search oracle is limited to n <= 4");
        }
        report.config["restarts"] = config.restarts;
        report.config["seed"] = config.seed;
        SearchOptions options;
        options.restarts = config.restarts;
        options.seed = config.seed;
        result = search_overlap_bound(n, options);
    } else {
        throw ValidationError("unknown oracle method: " + config.method);
    }
    report.summary["family_max"] = result.result.max_overlap_sq;
    report.summary["argmax"] = result.result.argmax_partition.label();
    report.summary["bound_holds"] = result.bound_holds;
    report.summary["saturating_confirmed"] = result.saturating_confirmed;
    report.summary["iterations"] = result.result.iterations;
    report.summary["qudit_cut_max"] = qudit_overlap_bound(n);
    for (const auto &p : result.per_partition) {
        ordered_json row;
        row["partition"] = p.partition.label();
        row["split_pairs"] = p.partition.split_pairs();
        row["overlap_sq"] = p.overlap_sq;
        row["iterations"] = p.iterations;
        report.rows.push_back(std::move(row));
    }
    return report;
}

Report cmd_settings(const RunConfig &config) {
    StabilizerSet system = resolve_system(config);
    WitnessSpec spec = require_witness(config, system);
    if (system.num_qubits() > 16) {
        throw CapacityError("settings decomposition is limited to 16 qubits");
    }
    Decomposition dec = decompose(spec);
    Report report;
    report.command = "settings";
    report.config["system"] = system.label();
    report.config["witness"] = spec.id();
    report.summary["naive_count"] = dec.naive_count;
    report.summary["merged_count"] = dec.num_settings();
    report.summary["terms"] = dec.num_terms();
    report.summary["identity_coefficient"] = to_string(dec.identity_coefficient);
    for (const auto &group : dec.groups) {
        ordered_json row;
        row["setting"] = group.setting.str();
        row["terms"] = group.terms.size();
        std::string listing;
        for (const auto &term : group.terms) {
            if (!listing.empty()) {
                listing += ' ';
            }
            Rational c = term.coefficient * term.sign;
            listing += (c < 0 ? "" : "+") + to_string(c) + "*" + term.pauli.letters();
        }
        row["paulis"] = listing;
        report.rows.push_back(std::move(row));
    }
    return report;
}

Report cmd_sample(const RunConfig &config) {
    if (config.state_id.empty()) {
        throw ValidationError("--state is required");
    }
    if (config.shots == 0) {
        throw ValidationError("--shots must be positive");
    }
    check_noise(config.p_noise);
    NamedState named = resolve_state(config.state_id);
    StabilizerSet system = config.n != 0 || !config.graph.empty() ? resolve_system(config) : named.system;
    WitnessSpec spec = require_witness(config, system);
    Decomposition dec = decompose(spec);
    std::vector<SampleRecord> records = draw_records(dec, named.state, config.p_noise, config.shots, config.seed);

    if (!config.records_out.empty()) {
        std::ofstream out(config.records_out);
        if (!out) {
            throw ValidationError("cannot write " + config.records_out);
        }
        write_json_lines(out, records);
    }

    Report report;
    report.command = "sample";
    report.config["state"] = named.id;
    report.config["system"] = system.label();
    report.config["witness"] = spec.id();
    report.config["p_noise"] = config.p_noise;
    report.config["shots"] = config.shots;
    report.config["seed"] = config.seed;
    report.config["rng"] = kRngAlgorithm;
    Estimate est = estimate(spec, records);
    report.summary["estimate"] = est.value;
    report.summary["std_error"] = est.std_error;
    for (const auto &record : records) {
        for (const auto &[outcome, count] : record.counts) {
            ordered_json row;
            row["setting"] = record.setting.str();
            row["outcome"] = outcome;
            row["count"] = count;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

Report run_command(const RunConfig &config) {
    if (config.command == "table1") {
        return cmd_table1(config);
    }
    if (config.command == "eval") {
        return cmd_eval(config);
    }
    if (config.command == "oracle") {
        return cmd_oracle(config);
    }
    if (config.command == "settings") {
        return cmd_settings(config);
    }
    if (config.command == "sample") {
        return cmd_sample(config);
    }
    throw ValidationError("unknown command: " + config.command);
}

int exit_code_for(const std::exception &e) {
    if (dynamic_cast<const CapacityError *>(&e)) {
        return 3;
    }
    if (dynamic_cast<const ConsistencyError *>(&e)) {
        return 4;
    }
    if (dynamic_cast<const ValidationError *>(&e) || dynamic_cast<const DomainError *>(&e) ||
        dynamic_cast<const DimensionError *>(&e) || dynamic_cast<const CoverageError *>(&e)) {
        return 2;
    }
    return 1;
}

}  // namespace witnesslab
