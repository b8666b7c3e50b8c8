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

#ifndef WITNESSLAB_GRAPH_H
#define WITNESSLAB_GRAPH_H

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace witnesslab {

/// Simple undirected graph on vertices 0..n-1. Vertex order doubles as the
/// stabilizer generator order of the corresponding graph state.
class GraphSpec {
   public:
    using Edge = std::pair<unsigned, unsigned>;

    /// Edges are stored as (min, max), sorted and deduplicated. Self-loops and
    /// out-of-range endpoints throw ValidationError.
    GraphSpec(unsigned n_vertices, std::vector<Edge> edges);

    static GraphSpec path(unsigned n);
    static GraphSpec star(unsigned n);
    static GraphSpec ring(unsigned n);
    static GraphSpec empty(unsigned n);
    /// Edges (2j-2, 2j-1) for j = 1..n_pairs: the graph form of the HE state.
    static GraphSpec disjoint_pairs(unsigned n_pairs);

    /// "path4", "star5", "ring6", or an edge list "0-1,1-2,2-3". An edge
    /// list may be prefixed with the vertex count, "5:0-1,1-2", to allow
    /// isolated trailing vertices.
    static GraphSpec parse(std::string_view text);

    unsigned num_vertices() const {
        return n_vertices_;
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    bool connected() const {
        return connected_;
    }
    std::uint64_t neighbors(unsigned vertex) const;
    std::string edge_list() const;
    /// Optional DOT rendering for reports.
    std::string to_dot() const;

   private:
    unsigned n_vertices_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adjacency_;
    bool connected_;
};

}  // namespace witnesslab

#endif
