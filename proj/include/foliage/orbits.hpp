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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "foliage/foliage.hpp"
#include "foliage/graph.hpp"
#include "foliage/partitions.hpp"

namespace foliage {

using BigRational = boost::multiprecision::cpp_rational;

/// Image list of a vertex permutation: v is sent to perm[v].
using Permutation = std::vector<std::size_t>;

inline constexpr std::size_t kMaxOrbitVertices = 16;
inline constexpr std::size_t kMaxClassVertices = 8;
inline constexpr std::size_t kMaxAutVertices = 8;

struct OrbitReport {
    Graph representative;
    /// |L_G|: labeled graphs reachable by local complementations.
    std::uint64_t labeled_size = 0;
    /// |C_G|: isomorphism classes among them.
    std::uint64_t class_size = 0;
    /// Sorted by packed adjacency key; filled only on request.
    std::optional<std::vector<Graph>> members;
};

/// Labeled LC-orbit by breadth-first closure under every local complement.
/// Throws GuardError above kMaxOrbitVertices unless forced.
OrbitReport lc_orbit(const Graph &g, bool store_members = false, bool force = false);

/// Canonical keys of every isomorphism class on n vertices, sorted.
std::vector<std::string> isomorphism_classes(std::size_t n, bool connected_only, std::size_t workers = 1,
                                             bool force = false);

struct ClassCensus {
    std::size_t n = 0;
    bool connected_only = true;
    /// One canonical representative per LC-class: the class member with
    /// the smallest canonical key. Ordered by that key.
    std::vector<Graph> representatives;
    /// Number of isomorphism classes inside each LC-class.
    std::vector<std::size_t> class_sizes;

    std::size_t count() const {
        return representatives.size();
    }
};

/// LC-classes (LC plus relabeling) on n vertices. Results are cached per
/// (n, connected_only). Throws GuardError above kMaxClassVertices unless forced.
ClassCensus lc_classes(std::size_t n, bool connected_only = true, std::size_t workers = 1, bool force = false);

struct AutBounds {
    /// prod_l l!^{T_l}, which is also the order of Aut_in.
    BigInt lower;
    /// lower * prod_l T_l!.
    BigInt upper;
    /// prod_l T_l!.
    BigInt out_upper;
    /// T_l: number of parts with exactly l vertices.
    std::map<std::size_t, std::size_t> size_counts;
};

AutBounds aut_bounds(const FoliagePartition &partition);

/// Adjacent transpositions inside each part, generating S_{V_1} x ... x S_{V_k}.
std::vector<Permutation> aut_in_group(const FoliagePartition &partition);

struct AutReport {
    FoliagePartition partition;
    std::uint64_t order = 0;
    std::vector<Permutation> generators;
    std::uint64_t aut_in_order = 0;
    std::uint64_t aut_out_upper_order = 0;
    /// |Aut_G| / |Aut_in|.
    std::uint64_t aut_out_order = 0;
    /// Permutation of part indices induced by each generator.
    std::vector<Permutation> part_permutations;
    std::uint64_t labeled_size = 0;
    std::uint64_t class_size = 0;
    /// |Aut_G| * |C_G| / |L_G|.
    BigRational statistic;
};

/// Brute force over all n! relabelings against the labeled orbit.
/// Throws GuardError above kMaxAutVertices unless forced.
AutReport lc_automorphism_group(const Graph &g, bool force = false);

/// Whether sigma(g) lies in the LC-orbit of g; sigma must have size n.
bool is_lc_automorphism(const Graph &g, const Permutation &sigma);

/// Permutation of part indices induced by sigma (part i goes to the part
/// containing sigma of its first vertex).
Permutation induced_part_permutation(const FoliagePartition &partition, const Permutation &sigma);

struct SaturationStatsRow {
    std::size_t n = 0;
    std::size_t classes = 0;
    BigRational avg_time;
    BigRational avg_size;
    BigRational reducible_ratio;
    BigRational fully_reducible_ratio;
};

/// Averages over one representative per connected LC-class on n vertices.
SaturationStatsRow saturation_stats(std::size_t n, std::size_t workers = 1, bool force = false);

/// "time,size,reducible,fully_reducible" at two decimals.
std::string to_csv(const SaturationStatsRow &row);

struct ClassTableRow {
    std::size_t class_id = 0;
    std::size_t n = 0;
    Graph representative;
    std::vector<std::size_t> part_sizes;
    AutReport aut;
};

/// Per-class symmetry data for every connected LC-class on n vertices.
std::vector<ClassTableRow> class_table(std::size_t n, std::size_t workers = 1, bool force = false);

/// Header "class_id,n,partition,aut_in,aut_out_upper,aut_order,L,C,I" plus one line per row.
std::string class_table_csv(const std::vector<ClassTableRow> &rows);

/// Round-half-up decimal rendering of a non-negative rational.
std::string format_fixed(const BigRational &value, unsigned places);

}  // namespace foliage
