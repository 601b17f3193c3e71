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
#include "foliage/weighted_graph.hpp"

#include <stdexcept>
#include <string>
#include <tuple>

namespace foliage {

bool is_prime(std::int64_t d) {
    if (d < 2) {
        return false;
    }
    for (std::int64_t p = 2; p * p <= d; p++) {
        if (d % p == 0) {
            return false;
        }
    }
    return true;
}

std::int64_t inverse_mod(std::int64_t x, std::int64_t d) {
    std::int64_t a = ((x % d) + d) % d;
    if (a == 0) {
        throw std::invalid_argument("zero has no inverse modulo " + std::to_string(d));
    }
    // Extended Euclid.
    std::int64_t r0 = d, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_tuple(r1, r0 - q * r1);
        std::tie(t0, t1) = std::make_tuple(t1, t0 - q * t1);
    }
    return ((t0 % d) + d) % d;
}

namespace {

void require_prime(std::int64_t d) {
    if (!is_prime(d)) {
        throw std::invalid_argument("weighted graph modulus " + std::to_string(d) + " is not prime");
    }
}

void require_vertex(const WeightedGraph &g, std::size_t v) {
    if (v >= g.size()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [0," + std::to_string(g.size()) + ")");
    }
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t n, std::int64_t d)
    : weights_(WeightMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))), d_(d) {
    require_prime(d);
}

WeightedGraph::WeightedGraph(WeightMatrix weights, std::int64_t d) : weights_(std::move(weights)), d_(d) {
    require_prime(d);
    if (weights_.rows() != weights_.cols()) {
        throw std::invalid_argument("weight matrix must be square");
    }
    for (Eigen::Index i = 0; i < weights_.rows(); i++) {
        if (weights_(i, i) != 0) {
            throw std::invalid_argument("weight matrix has a nonzero diagonal entry");
        }
        for (Eigen::Index j = 0; j < weights_.cols(); j++) {
            if (weights_(i, j) < 0 || weights_(i, j) >= d_) {
                throw std::invalid_argument("weight outside [0, d)");
            }
            if (weights_(i, j) != weights_(j, i)) {
                throw std::invalid_argument("weight matrix is not symmetric");
            }
        }
    }
}

WeightedGraph WeightedGraph::from_graph(const Graph &g, std::int64_t d) {
    WeightedGraph out(g.size(), d);
    for (auto [u, v] : g.edges()) {
        out.weights_(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1;
        out.weights_(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 1;
    }
    return out;
}

Graph WeightedGraph::support() const {
    GraphBuilder b(size());
    for (std::size_t u = 0; u < size(); u++) {
        for (std::size_t v = u + 1; v < size(); v++) {
            if (weight(u, v) != 0) {
                b.add_edge(u, v);
            }
        }
    }
    return std::move(b).build();
}

WeightedGraph build_weighted_graph(std::size_t n, std::int64_t d,
                                   const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> &edges) {
    require_prime(d);
    WeightMatrix m = WeightMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (auto [u, v, w] : edges) {
        if (u >= n || v >= n) {
            throw std::out_of_range("weighted edge endpoint outside [0," + std::to_string(n) + ")");
        }
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        }
        std::int64_t r = ((w % d) + d) % d;
        m(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = r;
        m(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = r;
    }
    return WeightedGraph(std::move(m), d);
}

WeightedGraph qudit_star(const WeightedGraph &g, std::size_t v, std::int64_t a) {
    require_vertex(g, v);
    const std::int64_t d = g.modulus();
    if (a < 0 || a >= d) {
        throw std::out_of_range("scalar " + std::to_string(a) + " outside [0," + std::to_string(d) + ")");
    }
    const auto &w = g.weights();
    const auto row = w.row(static_cast<Eigen::Index>(v));
    WeightMatrix out = w + a * (row.transpose() * row);
    out = out.unaryExpr([d](std::int64_t x) { return x % d; });
    out.diagonal().setZero();
    return WeightedGraph(std::move(out), d);
}

WeightedGraph qudit_scale(const WeightedGraph &g, std::size_t v, std::int64_t b) {
    require_vertex(g, v);
    const std::int64_t d = g.modulus();
    if (b <= 0 || b >= d) {
        throw std::invalid_argument("scale factor must be a nonzero element of Z_" + std::to_string(d));
    }
    WeightMatrix out = g.weights();
    const auto i = static_cast<Eigen::Index>(v);
    out.row(i) = (out.row(i) * b).unaryExpr([d](std::int64_t x) { return x % d; });
    out.col(i) = (out.col(i) * b).unaryExpr([d](std::int64_t x) { return x % d; });
    return WeightedGraph(std::move(out), d);
}

std::vector<VertexSubset> connected_components(const WeightedGraph &g) {
    return connected_components(g.support());
}

}  // namespace foliage
