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
#include "foliage/statevector.hpp"


#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "foliage/errors.hpp"

namespace foliage {

std::size_t statevector_entropy_oracle(const WeightedGraph &g, const VertexSubset &a, bool force) {
    const std::size_t n = g.size();
    const auto d = static_cast<std::size_t>(g.modulus());
    if (a.universe() != n) {
        throw std::invalid_argument("subset universe does not match the graph");
    }
    std::size_t dim = 1;
    for (std::size_t i = 0; i < n; i++) {
        if (dim > std::numeric_limits<std::size_t>::max() / d) {
            throw GuardError("state vector dimension d^n overflows");
        }
        dim *= d;
    }
    if (dim > kMaxStatevectorDimension && !force) {
        throw GuardError("state vector dimension d^n exceeds " + std::to_string(kMaxStatevectorDimension) +
                         "; pass force to override");
    }
    const auto inside = a.members();
    const auto outside = a.complement().members();
    std::size_t rows = 1, cols = 1;
    for (std::size_t i = 0; i < inside.size(); i++) {
        rows *= d;
    }
    for (std::size_t i = 0; i < outside.size(); i++) {
        cols *= d;
    }

    // Roots of unity omega^k for the controlled-phase factors.
    std::vector<std::complex<double>> roots(d);
    for (std::size_t k = 0; k < d; k++) {
        roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));

    Eigen::MatrixXcd psi(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    std::vector<std::size_t> digits(n);
    for (std::size_t r = 0; r < rows; r++) {
        std::size_t x = r;
        for (auto v : inside) {
            digits[v] = x % d;
            x /= d;
        }
        for (std::size_t c = 0; c < cols; c++) {
            std::size_t y = c;
            for (auto v : outside) {
                digits[v] = y % d;
                y /= d;
            }
            std::size_t phase = 0;
            for (std::size_t u = 0; u < n; u++) {
                if (digits[u] == 0) {
                    continue;
                }
                for (std::size_t v = u + 1; v < n; v++) {
                    phase += static_cast<std::size_t>(g.weight(u, v)) * digits[u] * digits[v];
                }
            }
            psi(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = norm * roots[phase % d];
        }
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(psi);
    const auto &sv = svd.singularValues();
    const double largest = sv.size() > 0 ? sv(0) : 0.0;
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); i++) {
        if (sv(i) > 1e-9 * largest) {
            rank++;
        }
    }
    std::size_t entropy = 0;
    std::size_t power = 1;
    while (power < rank) {
        power *= d;
        entropy++;
    }
    if (power != rank) {
        throw std::logic_error("Schmidt rank " + std::to_string(rank) + " is not a power of " + std::to_string(d));
    }
    return entropy;
}

std::size_t statevector_entropy_oracle(const Graph &g, const VertexSubset &a, bool force) {
    return statevector_entropy_oracle(WeightedGraph::from_graph(g, 2), a, force);
}

}  // namespace foliage
