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

#ifndef WITNESSLAB_REPORT_H
#define WITNESSLAB_REPORT_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "witnesslab/quantum_state.h"
#include "witnesslab/rational.h"
#include "witnesslab/stabilizers.h"
#include "witnesslab/witness.h"

namespace witnesslab {

inline constexpr std::string_view kReportSchema = "witnesslab/1";

enum class Format { Text, Json, Csv };
Format parse_format(std::string_view name);

struct RunConfig {
    std::string command;
    std::string state_id;    // he:n=2, graph:path4, psi1, psi2, rhoprime
    std::string witness_id;  // see WitnessSpec::parse
    double p_noise = 0.0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 1;
    Format format = Format::Text;
    unsigned n = 0;          // DOFs of an HE system; 0 when unset
    std::string graph;       // graph spec; empty when unset
    unsigned n_min = 1;
    unsigned n_max = 5;
    std::string method = "svd";
    unsigned restarts = 10;
    std::string records_path;  // JSON-lines sample records for offline estimates
    std::string records_out;   // where `sample` writes its records as JSON lines
};

/// A report is a header (command, config and summary fields) plus rows that
/// share one set of columns. Text and CSV render the rows as a table.
struct Report {
    std::string command;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    std::vector<nlohmann::ordered_json> rows;

    nlohmann::ordered_json to_json() const;
};

std::string render(const Report &report, Format format);
std::string render_json(const Report &report);
std::string render_csv(const Report &report);
std::string render_text(const Report &report);

/// RFC 4180 field quoting: fields with commas, quotes or line breaks are quoted.
std::string csv_field(std::string_view value);

// ---- table rows -------------------------------------------------------------

struct ReportRow {
    WitnessKind kind;
    unsigned n_qubits;
    std::string system;
    BigInt dimension;
    Rational trace;
    std::optional<Rational> bitstring_trace;
    std::optional<double> dense_trace;
    Rational p_max;
    std::optional<Rational> p_max_printed;
    std::optional<std::size_t> settings_count;
    std::string notes;

    nlohmann::ordered_json to_json() const;
};

struct Table1Options {
    unsigned bitstring_max_qubits = 20;
    unsigned dense_max_qubits = 8;
    unsigned settings_max_qubits = 12;
};

/// Rows for N = 2n (HE system) and N = 2n+1 (path graph) for each n in
/// [n_min, n_max], witnesses Wtilde, W1, W2, W3 in that order.
std::vector<ReportRow> table1_rows(unsigned n_min, unsigned n_max, const Table1Options &options = {});

// ---- resolution -------------------------------------------------------------

using ResolvedState = std::variant<StateVector, DensityOperator>;

/// Parses a state identifier. The system is the one the state lives in: HE
/// n=2 for the worked examples.
struct NamedState {
    std::string id;
    StabilizerSet system;
    ResolvedState state;
    bool is_target;  // the stabilizer state of `system` itself
};
NamedState resolve_state(std::string_view id);

/// System from --n / --graph, falling back to the state's system.
StabilizerSet resolve_system(const RunConfig &config);

// ---- commands ---------------------------------------------------------------

Report cmd_table1(const RunConfig &config);
Report cmd_eval(const RunConfig &config);
Report cmd_oracle(const RunConfig &config);
Report cmd_settings(const RunConfig &config);
Report cmd_sample(const RunConfig &config);
Report run_command(const RunConfig &config);

/// 0 success, 2 validation, 3 capacity, 4 internal consistency, 1 otherwise.
int exit_code_for(const std::exception &e);

}  // namespace witnesslab

#endif
