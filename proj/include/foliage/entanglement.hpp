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
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "foliage/bit_matrix.hpp"
#include "foliage/foliage.hpp"
#include "foliage/graph.hpp"
#include "foliage/weighted_graph.hpp"

namespace foliage {

inline constexpr std::size_t kMaxSchmidtVertices = 24;
inline constexpr std::size_t kMaxUniformityVertices = 20;

/// Entanglement entropy S_A of the graph state across A | complement(A):
/// the GF(2) rank of the A x A' block of the adjacency matrix.
std::size_t entropy(const Graph &g, const VertexSubset &a);

/// Entropies of every subset, indexed by bitmask.
struct EntropyVector {
    std::size_t n = 0;
    std::vector<std::uint8_t> values;

    std::size_t operator[](std::uint64_t mask) const {
        return values[mask];
    }
};

/// Throws GuardError for n > kMaxSchmidtVertices.
EntropyVector schmidt_vector(const Graph &g);

/// Rows `mask,size,entropy`, with a header line.
void write_schmidt_csv(std::ostream &out, const EntropyVector &s);

/// Gamma of the foliage graph plus a diagonal with ones on K parts.
BitMatrix e_matrix(const FoliageRepresentation &rep);

/// Entropy from the E-matrix block between the parts meeting A and the
/// parts meeting its complement. The graph must be in normal form (no AL
/// parts); std::invalid_argument otherwise.
std::size_t entropy_via_foliage(const Graph &g, const VertexSubset &a);
std::size_t entropy_via_foliage(const FoliageRepresentation &rep, const VertexSubset &a);

/// For a connected graph: whether the two-body marginal on {v, w} is
/// maximally mixed, i.e. v and w sit in different foliage parts.
bool marginal_maximally_mixed(const Graph &g, std::size_t v, std::size_t w);

struct UniformityReport {
    /// Largest k <= floor(n/2) with S_A = |A| for all |A| <= k.
    std::size_t k_max = 0;
    /// A subset of size k_max + 1 with S_A < |A|, when k_max < floor(n/2).
    std::optional<VertexSubset> witness;
    bool foliage_trivial = false;
};

/// Exhaustive over subsets; throws GuardError for n > kMaxUniformityVertices.
UniformityReport uniformity(const Graph &g);

}  // namespace foliage
