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
#include "foliage/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace foliage {

Graph::Graph(std::size_t n) : n_(n), stride_(words_for_bits(n)), bits_(n * stride_, 0) {
}

Graph Graph::from_adjacency(const BitMatrix &adjacency) {
    if (adjacency.rows() != adjacency.cols()) {
        throw std::invalid_argument("adjacency matrix must be square");
    }
    const std::size_t n = adjacency.rows();
    GraphBuilder builder(n);
    for (std::size_t u = 0; u < n; u++) {
        if (adjacency.get(u, u)) {
            throw std::invalid_argument("adjacency matrix has a nonzero diagonal entry at " + std::to_string(u));
        }
        for (std::size_t v = u + 1; v < n; v++) {
            if (adjacency.get(u, v) != adjacency.get(v, u)) {
                throw std::invalid_argument("adjacency matrix is not symmetric");
            }
            if (adjacency.get(u, v)) {
                builder.add_edge(u, v);
            }
        }
    }
    return std::move(builder).build();
}

std::size_t Graph::degree(std::size_t v) const {
    std::size_t d = 0;
    for (auto w : row(v)) {
        d += std::popcount(w);
    }
    return d;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    auto r = row(v);
    for (std::size_t i = 0; i < r.size(); i++) {
        Word w = r[i];
        while (w) {
            out.push_back(i * kWordBits + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

VertexSubset Graph::neighborhood(std::size_t v) const {
    auto members = neighbors(v);
    return VertexSubset::from_members(n_, members);
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (auto w : bits_) {
        twice += std::popcount(w);
    }
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n_; u++) {
        for (auto v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

BitMatrix Graph::adjacency() const {
    BitMatrix m(n_, n_);
    for (std::size_t u = 0; u < n_; u++) {
        auto dst = m.row(u);
        auto src = row(u);
        std::copy(src.begin(), src.end(), dst.begin());
    }
    return m;
}

Graph Graph::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != n_) {
        throw std::invalid_argument("permutation size does not match vertex count");
    }
    GraphBuilder builder(n_);
    for (auto [u, v] : edges()) {
        builder.add_edge(perm[u], perm[v]);
    }
    return std::move(builder).build();
}

Graph Graph::induced(const VertexSubset &s) const {
    auto members = s.members();
    std::vector<std::size_t> index(n_, n_);
    for (std::size_t i = 0; i < members.size(); i++) {
        index[members[i]] = i;
    }
    GraphBuilder builder(members.size());
    for (std::size_t i = 0; i < members.size(); i++) {
        for (auto w : neighbors(members[i])) {
            if (index[w] != n_ && index[w] > i) {
                builder.add_edge(i, index[w]);
            }
        }
    }
    return std::move(builder).build();
}

void GraphBuilder::check(std::size_t u, std::size_t v) const {
    const std::size_t n = graph_.n_;
    if (u >= n || v >= n) {
        throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (u == v) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
}

GraphBuilder &GraphBuilder::add_edge(std::size_t u, std::size_t v) {
    return set_edge(u, v, true);
}

GraphBuilder &GraphBuilder::set_edge(std::size_t u, std::size_t v, bool present) {
    check(u, v);
    auto &g = graph_;
    Word &a = g.bits_[u * g.stride_ + v / kWordBits];
    Word &b = g.bits_[v * g.stride_ + u / kWordBits];
    Word ab = Word{1} << (v % kWordBits);
    Word ba = Word{1} << (u % kWordBits);
    if (present) {
        a |= ab;
        b |= ba;
    } else {
        a &= ~ab;
        b &= ~ba;
    }
    return *this;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
    GraphBuilder builder(n);
    for (auto [u, v] : edges) {
        builder.add_edge(u, v);
    }
    return std::move(builder).build();
}

Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph complete_graph(std::size_t n) {
    GraphBuilder b(n);
    for (std::size_t u = 0; u < n; u++) {
        for (std::size_t v = u + 1; v < n; v++) {
            b.add_edge(u, v);
        }
    }
    return std::move(b).build();
}

Graph path_graph(std::size_t n) {
    GraphBuilder b(n);
    for (std::size_t v = 0; v + 1 < n; v++) {
        b.add_edge(v, v + 1);
    }
    return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
    GraphBuilder b(n);
    for (std::size_t v = 0; v + 1 < n; v++) {
        b.add_edge(v, v + 1);
    }
    if (n >= 3) {
        b.add_edge(n - 1, 0);
    }
    return std::move(b).build();
}

Graph star_graph(std::size_t n) {
    GraphBuilder b(n);
    for (std::size_t v = 1; v < n; v++) {
        b.add_edge(0, v);
    }
    return std::move(b).build();
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
    GraphBuilder builder(a + b);
    for (std::size_t u = 0; u < a; u++) {
        for (std::size_t v = a; v < a + b; v++) {
            builder.add_edge(u, v);
        }
    }
    return std::move(builder).build();
}

Graph local_complement(const Graph &g, std::size_t a) {
    if (a >= g.size()) {
        throw std::out_of_range("local complementation vertex " + std::to_string(a) + " outside [0," +
                                std::to_string(g.size()) + ")");
    }
    Graph out = g;
    const std::size_t stride = g.stride_;
    const Word *na = g.bits_.data() + a * stride;
    for (auto u : g.neighbors(a)) {
        Word *ru = out.bits_.data() + u * stride;
        for (std::size_t k = 0; k < stride; k++) {
            ru[k] ^= na[k];
        }
        // u is in its own neighborhood set; the diagonal stays zero.
        ru[u / kWordBits] &= ~(Word{1} << (u % kWordBits));
    }
    return out;
}

std::vector<VertexSubset> connected_components(const Graph &g) {
    const std::size_t n = g.size();
    std::vector<VertexSubset> out;
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < n; s++) {
        if (seen[s]) {
            continue;
        }
        VertexSubset comp(n);
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (auto w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph &g) {
    return connected_components(g).size() <= 1;
}

}  // namespace foliage
