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
#include "foliage/foliage.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace foliage {

std::string_view to_string(PartType t) {
    switch (t) {
        case PartType::Z:
            return "Z";
        case PartType::AL:
            return "AL";
        case PartType::K:
            return "K";
        case PartType::D:
            return "D";
    }
    return "?";
}

FoliagePartition::FoliagePartition(std::size_t n, std::vector<std::vector<std::size_t>> parts)
    : n_(n), parts_(std::move(parts)), part_of_(n, n) {
    for (auto &p : parts_) {
        if (p.empty()) {
            throw std::invalid_argument("foliage partition has an empty part");
        }
        std::sort(p.begin(), p.end());
    }
    std::sort(parts_.begin(), parts_.end());
    for (std::size_t i = 0; i < parts_.size(); i++) {
        for (auto v : parts_[i]) {
            if (v >= n || part_of_[v] != n) {
                throw std::invalid_argument("foliage partition parts are not disjoint within [0,n)");
            }
            part_of_[v] = i;
        }
    }
    for (std::size_t v = 0; v < n; v++) {
        if (part_of_[v] == n) {
            throw std::invalid_argument("foliage partition does not cover vertex " + std::to_string(v));
        }
    }
}

std::vector<std::size_t> FoliagePartition::part_sizes() const {
    std::vector<std::size_t> out;
    for (const auto &p : parts_) {
        out.push_back(p.size());
    }
    return out;
}

std::vector<VertexSubset> FoliagePartition::as_subsets() const {
    std::vector<VertexSubset> out;
    for (const auto &p : parts_) {
        out.push_back(VertexSubset::from_members(n_, p));
    }
    return out;
}

namespace {

void check_pair(std::size_t n, std::size_t v, std::size_t w) {
    if (v >= n || w >= n) {
        throw std::out_of_range("vertex outside [0," + std::to_string(n) + ")");
    }
    if (v == w) {
        throw std::invalid_argument("vertices_related needs two distinct vertices");
    }
}

bool same_component(const Graph &g, std::size_t v, std::size_t w) {
    for (const auto &c : connected_components(g)) {
        if (c.contains(v)) {
            return c.contains(w);
        }
    }
    return false;
}

// Row of v with the bits of v and w cleared, word k.
Word restricted_word(const Graph &g, std::size_t v, std::size_t w, std::size_t k) {
    Word x = g.row(v)[k];
    if (v / kWordBits == k) {
        x &= ~(Word{1} << (v % kWordBits));
    }
    if (w / kWordBits == k) {
        x &= ~(Word{1} << (w % kWordBits));
    }
    return x;
}

bool restricted_rows_equal(const Graph &g, std::size_t v, std::size_t w) {
    for (std::size_t k = 0; k < g.stride(); k++) {
        if (restricted_word(g, v, w, k) != restricted_word(g, w, v, k)) {
            return false;
        }
    }
    return true;
}

bool restricted_row_zero(const Graph &g, std::size_t v, std::size_t w) {
    for (std::size_t k = 0; k < g.stride(); k++) {
        if (restricted_word(g, v, w, k) != 0) {
            return false;
        }
    }
    return true;
}

// Rows of v and w over columns outside {v, w} are proportional over Z_d
// (a zero row is proportional to anything).
bool restricted_rows_proportional(const WeightedGraph &g, std::size_t v, std::size_t w) {
    const std::int64_t d = g.modulus();
    const std::size_t n = g.size();
    std::size_t pivot = n;
    for (std::size_t u = 0; u < n; u++) {
        if (u != v && u != w && g.weight(v, u) != 0) {
            pivot = u;
            break;
        }
    }
    if (pivot == n) {
        return true;
    }
    // ratio * w_{v,u} = w_{w,u} for every u.
    const std::int64_t ratio = g.weight(w, pivot) * inverse_mod(g.weight(v, pivot), d) % d;
    for (std::size_t u = 0; u < n; u++) {
        if (u == v || u == w) {
            continue;
        }
        if (ratio * g.weight(v, u) % d != g.weight(w, u)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool vertices_related(const Graph &g, std::size_t v, std::size_t w) {
    check_pair(g.size(), v, w);
    if (restricted_rows_equal(g, v, w) && !restricted_row_zero(g, v, w)) {
        return true;
    }
    if (restricted_row_zero(g, v, w) || restricted_row_zero(g, w, v)) {
        return same_component(g, v, w);
    }
    return false;
}

bool vertices_related(const WeightedGraph &g, std::size_t v, std::size_t w) {
    check_pair(g.size(), v, w);
    if (!restricted_rows_proportional(g, v, w)) {
        return false;
    }
    return same_component(g.support(), v, w);
}

namespace {

// Sweep shared by the qubit and qudit cases. Leaves and axils are read
// off the support degrees; only the twin test depends on the weights.
template <typename TwinTest>
FoliagePartition sweep(const Graph &support, TwinTest &&twins) {
    const std::size_t n = support.size();
    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; v++) {
        degree[v] = support.degree(v);
    }
    std::vector<char> assigned(n, 0);
    std::vector<std::vector<std::size_t>> parts;
    auto leaves_of = [&](std::size_t axil, std::vector<std::size_t> &part) {
        for (auto u : support.neighbors(axil)) {
            if (degree[u] == 1) {
                part.push_back(u);
            }
        }
    };
    for (std::size_t v = 0; v < n; v++) {
        if (assigned[v]) {
            continue;
        }
        std::vector<std::size_t> part;
        if (degree[v] == 0) {
            part.push_back(v);
        } else if (degree[v] == 1) {
            // v is a leaf: its class is the axil with all of the axil's leaves.
            const std::size_t axil = support.neighbors(v).front();
            part.push_back(axil);
            leaves_of(axil, part);
        } else {
            const auto nbrs = support.neighbors(v);
            const bool is_axil = std::any_of(nbrs.begin(), nbrs.end(), [&](std::size_t u) { return degree[u] == 1; });
            part.push_back(v);
            if (is_axil) {
                leaves_of(v, part);
            } else {
                for (std::size_t w = v + 1; w < n; w++) {
                    if (!assigned[w] && degree[w] >= 2 && twins(v, w)) {
                        part.push_back(w);
                    }
                }
            }
        }
        std::sort(part.begin(), part.end());
        part.erase(std::unique(part.begin(), part.end()), part.end());
        for (auto u : part) {
            assigned[u] = 1;
        }
        parts.push_back(std::move(part));
    }
    return FoliagePartition(n, std::move(parts));
}

}  // namespace

FoliagePartition foliage_partition(const Graph &g) {
    return sweep(g, [&](std::size_t v, std::size_t w) { return restricted_rows_equal(g, v, w); });
}

FoliagePartition foliage_partition(const WeightedGraph &g) {
    return sweep(g.support(), [&](std::size_t v, std::size_t w) { return restricted_rows_proportional(g, v, w); });
}

VertexSubset foliage_set(const Graph &g) {
    VertexSubset out(g.size());
    const FoliagePartition partition = foliage_partition(g);
    for (const auto &p : partition.parts()) {
        if (p.size() >= 2) {
            for (auto v : p) {
                out.insert(v);
            }
        }
    }
    return out;
}

namespace {

Graph build_foliage_graph(const Graph &g, const FoliagePartition &partition) {
    GraphBuilder builder(partition.size());
    for (std::size_t v = 0; v < g.size(); v++) {
        const auto pv = partition.part_of(v);
        for (auto u : g.neighbors(v)) {
            const auto pu = partition.part_of(u);
            if (pu != pv) {
                builder.add_edge(pv, pu);
            }
        }
    }
    return std::move(builder).build();
}

}  // namespace

FoliageRepresentation foliage_representation(const Graph &g) {
    FoliageRepresentation rep;
    rep.partition = foliage_partition(g);
    rep.foliage_graph = build_foliage_graph(g, rep.partition);
    rep.axils = VertexSubset(g.size());
    for (const auto &part : rep.partition.parts()) {
        const std::size_t m = part.size();
        if (m == 1) {
            rep.types.push_back(PartType::Z);
            continue;
        }
        std::size_t internal = 0;
        std::size_t center = g.size();
        for (auto v : part) {
            std::size_t inner_degree = 0;
            for (auto u : part) {
                inner_degree += g.adjacent(v, u) ? 1 : 0;
            }
            internal += inner_degree;
            if (inner_degree == m - 1) {
                center = v;
            }
        }
        internal /= 2;
        if (internal == 0) {
            rep.types.push_back(PartType::D);
        } else if (m == 2) {
            // An adjacent pair is a leaf with its axil unless the two share
            // their outside neighbors (twins), or form a K_2 component.
            const std::size_t a = part[0], b = part[1];
            const std::size_t da = g.degree(a), db = g.degree(b);
            if (da == 1 && db > 1) {
                rep.types.push_back(PartType::AL);
                rep.axils.insert(b);
            } else if (db == 1 && da > 1) {
                rep.types.push_back(PartType::AL);
                rep.axils.insert(a);
            } else {
                rep.types.push_back(PartType::K);
            }
        } else if (internal == m * (m - 1) / 2) {
            rep.types.push_back(PartType::K);
        } else {
            rep.types.push_back(PartType::AL);
            rep.axils.insert(center);
        }
    }
    return rep;
}

namespace {

void validate(const FoliageRepresentation &rep) {
    const auto &partition = rep.partition;
    if (rep.types.size() != partition.size() || rep.foliage_graph.size() != partition.size()) {
        throw std::invalid_argument("representation types/foliage graph do not match the partition size");
    }
    if (rep.axils.universe() != partition.universe()) {
        throw std::invalid_argument("axil set universe does not match the partition");
    }
    for (std::size_t i = 0; i < partition.size(); i++) {
        std::size_t axils_here = 0;
        for (auto v : partition.part(i)) {
            axils_here += rep.axils.contains(v) ? 1 : 0;
        }
        const bool want_one = rep.types[i] == PartType::AL;
        if (axils_here != (want_one ? 1u : 0u)) {
            throw std::invalid_argument("malformed axil set: part " + std::to_string(i) + " of type " +
                                        std::string(to_string(rep.types[i])) + " holds " +
                                        std::to_string(axils_here) + " axils");
        }
        if (rep.types[i] == PartType::Z && partition.part(i).size() != 1) {
            throw std::invalid_argument("type Z assigned to a part with more than one vertex");
        }
    }
}

std::size_t axil_of(const FoliageRepresentation &rep, std::size_t part) {
    for (auto v : rep.partition.part(part)) {
        if (rep.axils.contains(v)) {
            return v;
        }
    }
    return rep.partition.universe();
}

}  // namespace

Graph reconstruct_graph(const FoliageRepresentation &rep) {
    validate(rep);
    const auto &partition = rep.partition;
    GraphBuilder builder(partition.universe());
    // Vertices of a part that carry its outside edges.
    std::vector<std::vector<std::size_t>> ports(partition.size());
    for (std::size_t i = 0; i < partition.size(); i++) {
        const auto &part = partition.part(i);
        switch (rep.types[i]) {
            case PartType::K:
                for (std::size_t x = 0; x < part.size(); x++) {
                    for (std::size_t y = x + 1; y < part.size(); y++) {
                        builder.add_edge(part[x], part[y]);
                    }
                }
                ports[i] = part;
                break;
            case PartType::AL: {
                const auto axil = axil_of(rep, i);
                for (auto v : part) {
                    if (v != axil) {
                        builder.add_edge(axil, v);
                    }
                }
                ports[i] = {axil};
                break;
            }
            case PartType::D:
            case PartType::Z:
                ports[i] = part;
                break;
        }
    }
    for (auto [i, j] : rep.foliage_graph.edges()) {
        for (auto v : ports[i]) {
            for (auto w : ports[j]) {
                builder.add_edge(v, w);
            }
        }
    }
    return std::move(builder).build();
}

FoliageRepresentation lifted_local_complement(const FoliageRepresentation &rep, std::size_t a) {
    if (a >= rep.partition.universe()) {
        throw std::out_of_range("lifted local complementation vertex " + std::to_string(a) + " out of range");
    }
    const std::size_t ia = rep.partition.part_of(a);
    const PartType ta = rep.types[ia];
    if (ta == PartType::AL && !rep.axils.contains(a)) {
        // Complementing at a leaf only touches its single neighbor.
        return rep;
    }
    if (ta == PartType::K && rep.partition.part(ia).size() == 2 && rep.foliage_graph.degree(ia) == 0) {
        // K_2 component: fixed by local complementation, kept as type K.
        return rep;
    }
    FoliageRepresentation out = rep;
    out.foliage_graph = local_complement(rep.foliage_graph, ia);
    if (ta == PartType::K) {
        out.types[ia] = PartType::AL;
        out.axils.insert(a);
    } else if (ta == PartType::AL) {
        out.types[ia] = PartType::K;
        out.axils.erase(a);
    }
    for (auto j : rep.foliage_graph.neighbors(ia)) {
        if (rep.types[j] == PartType::K) {
            out.types[j] = PartType::D;
        } else if (rep.types[j] == PartType::D) {
            out.types[j] = PartType::K;
        }
    }
    return out;
}

Graph normal_form(const Graph &g) {
    Graph out = g;
    for (auto a : foliage_representation(g).axils.members()) {
        out = local_complement(out, a);
    }
    return out;
}

namespace {

SaturationReport saturate(Graph current) {
    SaturationReport report;
    report.chain.push_back(current.size());
    while (true) {
        auto rep = foliage_representation(current);
        if (rep.partition.is_trivial()) {
            break;
        }
        current = std::move(rep.foliage_graph);
        report.chain.push_back(current.size());
        report.time++;
    }
    report.size = report.chain.back();
    return report;
}

}  // namespace

SaturationReport saturation(const Graph &g) {
    SaturationReport report = saturate(g);
    auto comps = connected_components(g);
    if (comps.size() > 1) {
        for (const auto &c : comps) {
            report.components.push_back(saturate(g.induced(c)));
        }
    }
    return report;
}

namespace {

void write_set(std::ostream &out, const std::vector<std::size_t> &members) {
    out << '{';
    for (std::size_t i = 0; i < members.size(); i++) {
        out << (i ? "," : "") << members[i];
    }
    out << '}';
}

}  // namespace

std::string to_text(const FoliageRepresentation &rep) {
    std::ostringstream out;
    out << "parts=[";
    for (std::size_t i = 0; i < rep.partition.size(); i++) {
        if (i) {
            out << ',';
        }
        write_set(out, rep.partition.part(i));
        out << to_string(rep.types[i]);
        if (rep.types[i] == PartType::AL) {
            out << ":a" << axil_of(rep, i);
        }
    }
    out << "] edges=[";
    bool first = true;
    for (auto [i, j] : rep.foliage_graph.edges()) {
        out << (first ? "" : ",") << '(' << i << ',' << j << ')';
        first = false;
    }
    out << ']';
    return out.str();
}

std::string to_text(const FoliagePartition &partition) {
    std::ostringstream out;
    out << "parts=[";
    for (std::size_t i = 0; i < partition.size(); i++) {
        if (i) {
            out << ',';
        }
        write_set(out, partition.part(i));
    }
    out << ']';
    return out.str();
}

std::string to_json(const FoliageRepresentation &rep) {
    nlohmann::ordered_json j;
    j["parts"] = rep.partition.parts();
    auto types = nlohmann::ordered_json::array();
    for (auto t : rep.types) {
        types.push_back(std::string(to_string(t)));
    }
    j["types"] = types;
    j["axils"] = rep.axils.members();
    auto edges = nlohmann::ordered_json::array();
    for (auto [a, b] : rep.foliage_graph.edges()) {
        edges.push_back({a, b});
    }
    j["edges"] = edges;
    return j.dump();
}

}  // namespace foliage
