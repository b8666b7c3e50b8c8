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

#include "witnesslab/cli.h"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "witnesslab/errors.h"
#include "witnesslab/report.h"

namespace witnesslab {

namespace {

struct Flags {
    RunConfig config;
    std::string format = "text";
    std::string out_path;
};

void add_common(CLI::App *sub, Flags &flags) {
    sub->add_option("--format", flags.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", flags.out_path, "write the report here instead of stdout");
}

void add_system(CLI::App *sub, Flags &flags) {
    sub->add_option("--n", flags.config.n, "number of DOFs of the hyperentangled system");
    sub->add_option("--graph", flags.config.graph, "graph spec: path4, star5, ring6, empty3, 0-1,1-2 or 5:0-1");
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    Flags flags;
    RunConfig &cfg = flags.config;
    CLI::App app{"Hyperentanglement and graph-state witness toolkit"};
    app.require_subcommand(1);

    auto *table1 = app.add_subcommand("table1", "witness traces and noise thresholds");
    table1->add_option("--n-min", cfg.n_min, "smallest DOF count");
    table1->add_option("--n-max", cfg.n_max, "largest DOF count");
    add_common(table1, flags);

    auto *eval = app.add_subcommand("eval", "witness expectation on a state");
    eval->add_option("--state", cfg.state_id, "he:n=2, graph:path4, psi1, psi2 or rhoprime")->required();
    eval->add_option("--witness", cfg.witness_id, "wtilde, w1, w2, w3, wj:<j>, wjalt:<j> or qudit")->required();
    eval->add_option("--noise", cfg.p_noise, "white-noise fraction p");
    eval->add_option("--shots", cfg.shots, "shots per setting for a sampled estimate");
    eval->add_option("--seed", cfg.seed, "sampling seed");
    eval->add_option("--records", cfg.records_path, "estimate from these JSON-lines sample records");
    add_system(eval, flags);
    add_common(eval, flags);

    auto *oracle = app.add_subcommand("oracle", "max overlap of the HE state with biseparable states");
    oracle->add_option("--n", cfg.n, "number of DOFs")->required();
    oracle->add_option("--method", cfg.method, "svd or search")->check(CLI::IsMember({"svd", "search"}));
    oracle->add_option("--restarts", cfg.restarts, "random starts per partition (search)");
    oracle->add_option("--seed", cfg.seed, "search seed");
    add_common(oracle, flags);

    auto *settings = app.add_subcommand("settings", "local measurement settings of a witness");
    settings->add_option("--witness", cfg.witness_id, "witness identifier")->required();
    settings->add_option("--state", cfg.state_id, "take the system from this state");
    add_system(settings, flags);
    add_common(settings, flags);

    auto *sample = app.add_subcommand("sample", "simulated counts for every setting of a witness");
    sample->add_option("--state", cfg.state_id, "state identifier")->required();
    sample->add_option("--witness", cfg.witness_id, "witness whose settings are measured")->required();
    sample->add_option("--noise", cfg.p_noise, "white-noise fraction p");
    sample->add_option("--shots", cfg.shots, "shots per setting")->required();
    sample->add_option("--seed", cfg.seed, "sampling seed");
    sample->add_option("--records-out", cfg.records_out, "also write the records as JSON lines");
    add_system(sample, flags);
    add_common(sample, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    for (auto *sub : app.get_subcommands()) {
        cfg.command = sub->get_name();
    }

    try {
        cfg.format = parse_format(flags.format);
        std::string text = render(run_command(cfg), cfg.format);
        if (flags.out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(flags.out_path, std::ios::binary);
            if (!file || !(file << text)) {
                throw ValidationError("cannot write " + flags.out_path);
            }
        }
        return 0;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

}  // namespace witnesslab
