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

#include "foliage/bit_matrix.hpp"
#include "foliage/graph.hpp"
#include "foliage/weighted_graph.hpp"

namespace foliage {

/// Upper bound on d^n for the dense state-vector oracle.
inline constexpr std::size_t kMaxStatevectorDimension = std::size_t{1} << 20;

/// Entanglement entropy (in units of log d) of the graph state across
/// A | A', computed from the dense amplitude vector: the amplitudes are
/// reshaped into a d^|A| x d^|A'| matrix whose numerical rank (singular
/// values above 1e-9 of the largest) is the Schmidt rank.
///
/// Independent of the GF(2) rank formula; meant for cross-checks at desk
/// sizes. Throws GuardError when d^n exceeds kMaxStatevectorDimension
/// (unless forced) and
/// std::logic_error if the Schmidt rank is not a power of d.
std::size_t statevector_entropy_oracle(const WeightedGraph &g, const VertexSubset &a, bool force = false);
std::size_t statevector_entropy_oracle(const Graph &g, const VertexSubset &a, bool force = false);

}  // namespace foliage
