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
#include <vector>

#include <Eigen/Core>

#include "foliage/graph.hpp"

namespace foliage {

using WeightMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

bool is_prime(std::int64_t d);
/// Multiplicative inverse of x modulo the prime d; x must be nonzero mod d.
std::int64_t inverse_mod(std::int64_t x, std::int64_t d);

/// Graph with edge weights in Z_d for a prime d; weight 0 means no edge.
class WeightedGraph {
   public:
    WeightedGraph() = default;
    /// Edgeless graph on n vertices over Z_d.
    WeightedGraph(std::size_t n, std::int64_t d);
    /// Validates primality of d, symmetry, zero diagonal and range [0, d).
    WeightedGraph(WeightMatrix weights, std::int64_t d);

    /// Embeds a qubit-style graph with unit weights.
    static WeightedGraph from_graph(const Graph &g, std::int64_t d);

    std::size_t size() const {
        return static_cast<std::size_t>(weights_.rows());
    }
    std::int64_t modulus() const {
        return d_;
    }
    std::int64_t weight(std::size_t u, std::size_t v) const {
        return weights_(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
    }
    const WeightMatrix &weights() const {
        return weights_;
    }
    /// Unweighted graph on the nonzero entries.
    Graph support() const;

    bool operator==(const WeightedGraph &other) const {
        return d_ == other.d_ && weights_ == other.weights_;
    }

   private:
    WeightMatrix weights_;
    std::int64_t d_ = 2;
};

/// Weighted graph with the listed (u, v, w) entries; w is reduced mod d.
WeightedGraph build_weighted_graph(std::size_t n, std::int64_t d,
                                   const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> &edges);

/// Qudit local complementation: off-diagonal (j, k) becomes
/// w_jk + a * w_vj * w_vk (mod d).
WeightedGraph qudit_star(const WeightedGraph &g, std::size_t v, std::int64_t a);

/// Multiplies row and column v by the nonzero scalar b (mod d).
WeightedGraph qudit_scale(const WeightedGraph &g, std::size_t v, std::int64_t b);

std::vector<VertexSubset> connected_components(const WeightedGraph &g);

}  // namespace foliage
