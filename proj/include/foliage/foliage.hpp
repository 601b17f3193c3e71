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
#include <string>
#include <string_view>
#include <vector>

#include "foliage/graph.hpp"
#include "foliage/weighted_graph.hpp"

namespace foliage {

/// Shape of one part of the foliage partition.
///   Z  - a single vertex
///   AL - a star attached to the rest of the graph only through its center (the axil)
///   K  - a clique of pairwise twins
///   D  - an independent set of twins
enum class PartType : unsigned char { Z, AL, K, D };

std::string_view to_string(PartType t);

/// Disjoint vertex sets covering [0, n), ordered by smallest member.
class FoliagePartition {
   public:
    FoliagePartition() = default;
    /// Sorts parts and their members; throws unless they cover [0, n) disjointly.
    FoliagePartition(std::size_t n, std::vector<std::vector<std::size_t>> parts);

    std::size_t universe() const {
        return n_;
    }
    std::size_t size() const {
        return parts_.size();
    }
    const std::vector<std::size_t> &part(std::size_t i) const {
        return parts_[i];
    }
    const std::vector<std::vector<std::size_t>> &parts() const {
        return parts_;
    }
    std::size_t part_of(std::size_t v) const {
        return part_of_[v];
    }
    bool is_trivial() const {
        return parts_.size() == n_;
    }
    std::vector<std::size_t> part_sizes() const;
    std::vector<VertexSubset> as_subsets() const;

    bool operator==(const FoliagePartition &other) const {
        return parts_ == other.parts_;
    }

   private:
    std::size_t n_ = 0;
    std::vector<std::vector<std::size_t>> parts_;
    std::vector<std::size_t> part_of_;
};

/// Whether v and w lie in one component and every cross product
/// a[v][u1] * a[w][u2] - a[v][u2] * a[w][u1] over u1, u2 outside {v, w}
/// vanishes. Throws if v == w.
bool vertices_related(const Graph &g, std::size_t v, std::size_t w);
bool vertices_related(const WeightedGraph &g, std::size_t v, std::size_t w);

/// Equivalence classes of vertices_related in O(n^3): each sweep step
/// takes the smallest unassigned vertex and emits its whole class as
/// leaf-plus-axil, axil-plus-leaves, or twin set.
FoliagePartition foliage_partition(const Graph &g);
FoliagePartition foliage_partition(const WeightedGraph &g);

/// Union of all parts with at least two members.
VertexSubset foliage_set(const Graph &g);

struct FoliageRepresentation {
    FoliagePartition partition;
    /// Graph on part indices; parts adjacent iff some cross edge exists.
    Graph foliage_graph;
    std::vector<PartType> types;
    /// One axil per AL part, nothing else.
    VertexSubset axils;

    bool operator==(const FoliageRepresentation &other) const = default;
};

/// Partition, foliage graph, part types and axils of g. A two-vertex
/// clique component is typed K with no axil.
FoliageRepresentation foliage_representation(const Graph &g);

/// Rebuilds the graph encoded by a representation. Throws
/// std::invalid_argument when the axil set does not hold exactly one
/// vertex of every AL part and none elsewhere.
Graph reconstruct_graph(const FoliageRepresentation &rep);

/// Representation of local_complement(g, a), computed from the
/// representation of g alone.
FoliageRepresentation lifted_local_complement(const FoliageRepresentation &rep, std::size_t a);

/// LC-equivalent graph without AL parts: local complementation at every
/// axil, in ascending vertex order.
Graph normal_form(const Graph &g);

struct SaturationReport {
    /// Number of foliage-graph steps until the partition is trivial.
    std::size_t time = 0;
    /// Order of the saturated graph.
    std::size_t size = 0;
    /// Orders of g, its foliage graph, the foliage graph of that, ... ending
    /// at the saturated graph.
    std::vector<std::size_t> chain;
    /// Per-component reports, filled only for disconnected inputs.
    std::vector<SaturationReport> components;
};

SaturationReport saturation(const Graph &g);

/// One-line form, e.g. `parts=[{0,1}AL:a1,{2,3}AL:a2] edges=[(0,1)]`.
std::string to_text(const FoliageRepresentation &rep);
/// `parts=[{0,1},{2}]`
std::string to_text(const FoliagePartition &partition);
/// JSON object with keys in the fixed order parts, types, axils, edges.
std::string to_json(const FoliageRepresentation &rep);

}  // namespace foliage
