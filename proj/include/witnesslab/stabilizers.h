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

#ifndef WITNESSLAB_STABILIZERS_H
#define WITNESSLAB_STABILIZERS_H

#include <optional>
#include <string>
#include <vector>

#include "witnesslab/graph.h"
#include "witnesslab/pauli.h"

namespace witnesslab {

/// The system a witness refers to: the hyperentangled state on n DOFs
/// (N = 2n qubits) or the graph state of a graph on N vertices, together
/// with its N commuting stabilizer generators.
///
/// Generators are stored 0-based. For HE systems generator 2j-2 is
/// X_{A_j} X_{B_j} and generator 2j-1 is Z_{A_j} Z_{B_j}, so 1-based "odd k"
/// generators are the XX type and "even k" the ZZ type. For graphs generator
/// k is X_k prod_{l in N(k)} Z_l.
class StabilizerSet {
   public:
    enum class Kind { HyperEntangled, Graph };

    static StabilizerSet hyperentangled(unsigned n_dofs);
    static StabilizerSet graph(GraphSpec graph);

    Kind kind() const {
        return kind_;
    }
    bool is_hyperentangled() const {
        return kind_ == Kind::HyperEntangled;
    }
    unsigned num_qubits() const {
        return static_cast<unsigned>(generators_.size());
    }
    /// n for HE systems; throws ValidationError for graphs.
    unsigned num_dofs() const;
    const std::optional<GraphSpec> &graph_spec() const {
        return graph_;
    }
    const std::vector<PauliString> &generators() const {
        return generators_;
    }
    const PauliString &generator(unsigned index) const {
        return generators_.at(index);
    }
    /// prod_{k in mask} S_k. Generators commute, so the order is irrelevant.
    PauliString product(std::uint64_t mask) const;

    /// "he:n=2" or "graph:4:0-1,1-2,2-3".
    std::string label() const;

   private:
    StabilizerSet(Kind kind, std::vector<PauliString> generators, std::optional<GraphSpec> graph);

    Kind kind_;
    std::vector<PauliString> generators_;
    std::optional<GraphSpec> graph_;
};

}  // namespace witnesslab

#endif
