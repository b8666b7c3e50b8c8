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

#include "witnesslab/stabilizers.h"

#include "witnesslab/errors.h"

namespace witnesslab {

StabilizerSet::StabilizerSet(Kind kind, std::vector<PauliString> generators, std::optional<GraphSpec> graph)
    : kind_(kind), generators_(std::move(generators)), graph_(std::move(graph)) {
}

StabilizerSet StabilizerSet::hyperentangled(unsigned n_dofs) {
    QubitIndexMap map(n_dofs);
    unsigned n = map.num_qubits();
    std::vector<PauliString> gens;
    for (unsigned j = 1; j <= n_dofs; j++) {
        std::uint64_t pair = (std::uint64_t{1} << map.qubit(j, Particle::A)) |
                             (std::uint64_t{1} << map.qubit(j, Particle::B));
        gens.emplace_back(n, pair, 0);
        gens.emplace_back(n, 0, pair);
    }
    return StabilizerSet(Kind::HyperEntangled, std::move(gens), std::nullopt);
}

StabilizerSet StabilizerSet::graph(GraphSpec graph) {
    unsigned n = graph.num_vertices();
    std::vector<PauliString> gens;
    for (unsigned k = 0; k < n; k++) {
        gens.emplace_back(n, std::uint64_t{1} << k, graph.neighbors(k));
    }
    return StabilizerSet(Kind::Graph, std::move(gens), std::move(graph));
}

unsigned StabilizerSet::num_dofs() const {
    if (kind_ != Kind::HyperEntangled) {
        throw ValidationError("DOF count is only defined for hyperentangled systems");
    }
    return num_qubits() / 2;
}

PauliString StabilizerSet::product(std::uint64_t mask) const {
    PauliString acc(num_qubits());
    for (unsigned k = 0; k < num_qubits(); k++) {
        if ((mask >> k) & 1) {
            acc = acc * generators_[k];
        }
    }
    return acc;
}

std::string StabilizerSet::label() const {
    if (kind_ == Kind::HyperEntangled) {
        return "he:n=" + std::to_string(num_dofs());
    }
    return "graph:" + graph_->edge_list();
}

}  // namespace witnesslab
