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

#include "witnesslab/graph.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "witnesslab/errors.h"

namespace witnesslab {

namespace {

unsigned parse_uint(std::string_view text, std::string_view context) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ValidationError("bad integer '" + std::string(text) + "' in graph '" + std::string(context) + "'");
    }
    return value;
}

}  // namespace

GraphSpec::GraphSpec(unsigned n_vertices, std::vector<Edge> edges) : n_vertices_(n_vertices) {
    if (n_vertices == 0 || n_vertices > 64) {
        throw ValidationError("graph needs 1..64 vertices");
    }
    for (auto &[a, b] : edges) {
        if (a == b) {
            throw ValidationError("self-loop on vertex " + std::to_string(a));
        }
        if (a >= n_vertices || b >= n_vertices) {
            throw ValidationError("edge endpoint outside 0.." + std::to_string(n_vertices - 1));
        }
        if (a > b) {
            std::swap(a, b);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adjacency_.assign(n_vertices, 0);
    for (auto [a, b] : edges_) {
        adjacency_[a] |= std::uint64_t{1} << b;
        adjacency_[b] |= std::uint64_t{1} << a;
    }

    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) {
            next |= adjacency_[static_cast<unsigned>(std::countr_zero(f))];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    connected_ = static_cast<unsigned>(std::popcount(seen)) == n_vertices;
}

GraphSpec GraphSpec::path(unsigned n) {
    std::vector<Edge> edges;
    for (unsigned k = 0; k + 1 < n; k++) {
        edges.emplace_back(k, k + 1);
    }
    return GraphSpec(n, std::move(edges));
}

GraphSpec GraphSpec::star(unsigned n) {
    std::vector<Edge> edges;
    for (unsigned k = 1; k < n; k++) {
        edges.emplace_back(0, k);
    }
    return GraphSpec(n, std::move(edges));
}

GraphSpec GraphSpec::ring(unsigned n) {
    if (n < 3) {
        throw ValidationError("ring graph needs at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (unsigned k = 0; k < n; k++) {
        edges.emplace_back(k, (k + 1) % n);
    }
    return GraphSpec(n, std::move(edges));
}

GraphSpec GraphSpec::empty(unsigned n) {
    return GraphSpec(n, {});
}

GraphSpec GraphSpec::disjoint_pairs(unsigned n_pairs) {
    std::vector<Edge> edges;
    for (unsigned j = 0; j < n_pairs; j++) {
        edges.emplace_back(2 * j, 2 * j + 1);
    }
    return GraphSpec(2 * n_pairs, std::move(edges));
}

GraphSpec GraphSpec::parse(std::string_view text) {
    for (std::string_view family : {"path", "star", "ring", "empty"}) {
        if (text.starts_with(family) && text.size() > family.size() &&
            text.find('-') == std::string_view::npos) {
            unsigned n = parse_uint(text.substr(family.size()), text);
            if (family == "path") return path(n);
            if (family == "star") return star(n);
            if (family == "ring") return ring(n);
            return empty(n);
        }
    }

    std::string_view body = text;
    unsigned declared = 0;
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
        declared = parse_uint(text.substr(0, colon), text);
        body = text.substr(colon + 1);
    }
    std::vector<Edge> edges;
    unsigned max_vertex = 0;
    while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view item = body.substr(0, comma);
        auto dash = item.find('-');
        if (dash == std::string_view::npos) {
            throw ValidationError("bad edge '" + std::string(item) + "' in graph '" + std::string(text) + "'");
        }
        unsigned a = parse_uint(item.substr(0, dash), text);
        unsigned b = parse_uint(item.substr(dash + 1), text);
        edges.emplace_back(a, b);
        max_vertex = std::max({max_vertex, a, b});
        body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    }
    if (edges.empty() && declared == 0) {
        throw ValidationError("graph '" + std::string(text) + "' has no edges and no vertex count");
    }
    unsigned n = declared ? declared : max_vertex + 1;
    return GraphSpec(n, std::move(edges));
}

std::uint64_t GraphSpec::neighbors(unsigned vertex) const {
    if (vertex >= n_vertices_) {
        throw ValidationError("vertex index out of range");
    }
    return adjacency_[vertex];
}

std::string GraphSpec::edge_list() const {
    std::ostringstream out;
    out << n_vertices_ << ':';
    for (size_t k = 0; k < edges_.size(); k++) {
        out << (k ? "," : "") << edges_[k].first << '-' << edges_[k].second;
    }
    return out.str();
}

std::string GraphSpec::to_dot() const {
    std::ostringstream out;
    out << "graph G {\n";
    for (unsigned v = 0; v < n_vertices_; v++) {
        out << "  " << v << ";\n";
    }
    for (auto [a, b] : edges_) {
        out << "  " << a << " -- " << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace witnesslab
