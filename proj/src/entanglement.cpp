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
#include "foliage/entanglement.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "foliage/errors.hpp"

namespace foliage {

namespace {

// Entropy for n <= 64 with the subset given as a mask.
std::size_t entropy_mask(const Graph &g, std::uint64_t mask) {
    const std::size_t n = g.size();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    const std::uint64_t rest = all & ~mask;
    std::uint64_t rows[64];
    std::size_t count = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) {
        rows[count++] = g.row(static_cast<std::size_t>(std::countr_zero(m)))[0] & rest;
    }
    return gf2_rank_words({rows, count});
}

}  // namespace

std::size_t entropy(const Graph &g, const VertexSubset &a) {
    if (a.universe() != g.size()) {
        throw std::invalid_argument("subset universe does not match the graph");
    }
    if (g.size() <= 64) {
        return entropy_mask(g, a.mask());
    }
    auto inside = a.members();
    auto outside = a.complement().members();
    BitMatrix block(inside, outside);
    for (std::size_t r = 0; r < inside.size(); r++) {
        for (std::size_t c = 0; c < outside.size(); c++) {
            if (g.adjacent(inside[r], outside[c])) {
                block.set(r, c, true);
            }
        }
    }
    return gf2_rank(block);
}

EntropyVector schmidt_vector(const Graph &g) {
    const std::size_t n = g.size();
    if (n > kMaxSchmidtVertices) {
        throw GuardError("schmidt vector needs n <= " + std::to_string(kMaxSchmidtVertices) + ", got " +
                         std::to_string(n));
    }
    EntropyVector s;
    s.n = n;
    const std::uint64_t total = std::uint64_t{1} << n;
    s.values.assign(total, 0);
    const std::uint64_t all = total - 1;
    // S_A = S_{A'}: evaluate the half with the top vertex outside A.
    const std::uint64_t half = n == 0 ? 1 : total / 2;
    for (std::uint64_t mask = 0; mask < half; mask++) {
        auto e = static_cast<std::uint8_t>(entropy_mask(g, mask));
        s.values[mask] = e;
        s.values[all & ~mask] = e;
    }
    return s;
}

void write_schmidt_csv(std::ostream &out, const EntropyVector &s) {
    out << "mask,size,entropy\n";
    for (std::uint64_t mask = 0; mask < s.values.size(); mask++) {
        out << mask << ',' << std::popcount(mask) << ',' << static_cast<int>(s.values[mask]) << '\n';
    }
}

BitMatrix e_matrix(const FoliageRepresentation &rep) {
    BitMatrix e = rep.foliage_graph.adjacency();
    for (std::size_t i = 0; i < rep.types.size(); i++) {
        if (rep.types[i] == PartType::K) {
            e.set(i, i, true);
        }
    }
    return e;
}

std::size_t entropy_via_foliage(const FoliageRepresentation &rep, const VertexSubset &a) {
    for (auto t : rep.types) {
        if (t == PartType::AL) {
            throw std::invalid_argument("entropy_via_foliage needs a graph in normal form (found an AL part)");
        }
    }
    if (a.universe() != rep.partition.universe()) {
        throw std::invalid_argument("subset universe does not match the graph");
    }
    const auto &partition = rep.partition;
    std::vector<std::size_t> meets_a, meets_rest;
    for (std::size_t i = 0; i < partition.size(); i++) {
        bool in = false, out = false;
        for (auto v : partition.part(i)) {
            (a.contains(v) ? in : out) = true;
        }
        if (in) {
            meets_a.push_back(i);
        }
        if (out) {
            meets_rest.push_back(i);
        }
    }
    const BitMatrix e = e_matrix(rep);
    BitMatrix block(meets_a, meets_rest);
    for (std::size_t r = 0; r < meets_a.size(); r++) {
        for (std::size_t c = 0; c < meets_rest.size(); c++) {
            block.set(r, c, e.get(meets_a[r], meets_rest[c]));
        }
    }
    return gf2_rank(block);
}

std::size_t entropy_via_foliage(const Graph &g, const VertexSubset &a) {
    return entropy_via_foliage(foliage_representation(g), a);
}

bool marginal_maximally_mixed(const Graph &g, std::size_t v, std::size_t w) {
    if (v >= g.size() || w >= g.size()) {
        throw std::out_of_range("vertex outside the graph");
    }
    if (v == w) {
        throw std::invalid_argument("marginal_maximally_mixed needs two distinct vertices");
    }
    if (!is_connected(g)) {
        throw std::invalid_argument("marginal_maximally_mixed needs a connected graph");
    }
    const auto partition = foliage_partition(g);
    return partition.part_of(v) != partition.part_of(w);
}

UniformityReport uniformity(const Graph &g) {
    const std::size_t n = g.size();
    if (n > kMaxUniformityVertices) {
        throw GuardError("uniformity needs n <= " + std::to_string(kMaxUniformityVertices) + ", got " +
                         std::to_string(n));
    }
    UniformityReport report;
    report.foliage_trivial = foliage_partition(g).is_trivial();
    const std::size_t limit = n / 2;
    for (std::size_t k = 1; k <= limit; k++) {
        // Masks with exactly k bits, in increasing order (Gosper's hack).
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        const std::uint64_t end = std::uint64_t{1} << n;
        while (mask < end) {
            if (entropy_mask(g, mask) < k) {
                report.witness = VertexSubset::from_mask(n, mask);
                return report;
            }
            const std::uint64_t c = mask & (~mask + 1);
            const std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        report.k_max = k;
    }
    return report;
}

}  // namespace foliage
