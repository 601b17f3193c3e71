// Copyright 2026 The Foliage Authors
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
#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "foliage/bit_matrix.hpp"

namespace foliage {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..n-1, stored as a symmetric
/// bit-packed adjacency matrix with zero diagonal.
///
/// Values are immutable once built; every graph operation returns a new
/// graph. Use GraphBuilder to assemble one edge by edge.
class Graph {
   public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n);

    /// Validates symmetry and zero diagonal of a square matrix.
    static Graph from_adjacency(const BitMatrix &adjacency);

    std::size_t size() const {
        return n_;
    }
    std::size_t stride() const {
        return stride_;
    }
    bool adjacent(std::size_t u, std::size_t v) const {
        return (bits_[u * stride_ + v / kWordBits] >> (v % kWordBits)) & 1;
    }
    std::span<const Word> row(std::size_t v) const {
        return {bits_.data() + v * stride_, stride_};
    }
    std::size_t degree(std::size_t v) const;
    std::vector<std::size_t> neighbors(std::size_t v) const;
    VertexSubset neighborhood(std::size_t v) const;
    std::size_t edge_count() const;
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    BitMatrix adjacency() const;

    /// Relabels vertex v as perm[v].
    Graph permuted(std::span<const std::size_t> perm) const;
    /// Subgraph induced on the members of s, relabeled in ascending order.
    Graph induced(const VertexSubset &s) const;

    bool operator==(const Graph &other) const = default;

   private:
    friend class GraphBuilder;
    friend Graph local_complement(const Graph &g, std::size_t a);

    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> bits_;
};

class GraphBuilder {
   public:
    explicit GraphBuilder(std::size_t n) : graph_(n) {
    }
    GraphBuilder &add_edge(std::size_t u, std::size_t v);
    GraphBuilder &set_edge(std::size_t u, std::size_t v, bool present);
    Graph build() && {
        return std::move(graph_);
    }
    Graph build() const & {
        return graph_;
    }

   private:
    void check(std::size_t u, std::size_t v) const;
    Graph graph_;
};

/// Graph on n vertices with exactly the given edges. Duplicates are
/// idempotent; out-of-range endpoints and self-loops are rejected.
Graph build_graph(std::size_t n, std::span<const Edge> edges);
Graph build_graph(std::size_t n, std::initializer_list<Edge> edges);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Star with center 0 and leaves 1..n-1.
Graph star_graph(std::size_t n);
/// Complete bipartite graph with sides {0..a-1} and {a..a+b-1}.
Graph complete_bipartite_graph(std::size_t a, std::size_t b);

/// Local complementation: toggles every edge inside the neighborhood of a.
Graph local_complement(const Graph &g, std::size_t a);

/// Connected components, ordered by their smallest member.
std::vector<VertexSubset> connected_components(const Graph &g);
bool is_connected(const Graph &g);

}  // namespace foliage
