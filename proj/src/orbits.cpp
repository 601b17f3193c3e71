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
#include "foliage/orbits.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <deque>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "foliage/canonical.hpp"
#include "foliage/errors.hpp"
#include "foliage/io.hpp"

namespace foliage {

namespace {

using Rows = std::array<std::uint32_t, kMaxOrbitVertices>;

struct PackedKey {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    auto operator<=>(const PackedKey &) const = default;
};

struct PackedKeyHash {
    std::size_t operator()(const PackedKey &k) const {
        std::uint64_t h = k.lo * 0x9E3779B97F4A7C15ull;
        h ^= (k.hi + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2));
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

// Upper triangle, row by row, at most 120 bits for 16 vertices.
PackedKey pack(const Rows &rows, std::size_t n) {
    PackedKey key;
    std::size_t pos = 0;
    for (std::size_t u = 0; u + 1 < n; u++) {
        const std::uint64_t bits = rows[u] >> (u + 1);
        const std::size_t len = n - 1 - u;
        if (pos < 64) {
            key.lo |= bits << pos;
            if (pos + len > 64) {
                key.hi |= bits >> (64 - pos);
            }
        } else {
            key.hi |= bits << (pos - 64);
        }
        pos += len;
    }
    return key;
}

Rows to_rows(const Graph &g) {
    Rows rows{};
    for (std::size_t v = 0; v < g.size(); v++) {
        rows[v] = static_cast<std::uint32_t>(g.row(v)[0]);
    }
    return rows;
}

Graph from_rows(const Rows &rows, std::size_t n) {
    GraphBuilder builder(n);
    for (std::size_t u = 0; u < n; u++) {
        for (std::uint32_t m = rows[u] >> (u + 1); m; m &= m - 1) {
            builder.add_edge(u, u + 1 + static_cast<std::size_t>(std::countr_zero(m)));
        }
    }
    return std::move(builder).build();
}

void complement_rows(Rows &rows, std::size_t a) {
    const std::uint32_t na = rows[a];
    for (std::uint32_t m = na; m; m &= m - 1) {
        const auto u = static_cast<std::size_t>(std::countr_zero(m));
        rows[u] ^= na & ~(std::uint32_t{1} << u);
    }
}

Rows permute_rows(const Rows &rows, std::size_t n, const std::array<std::uint8_t, kMaxOrbitVertices> &sigma) {
    Rows out{};
    for (std::size_t v = 0; v < n; v++) {
        std::uint32_t image = 0;
        for (std::uint32_t m = rows[v]; m; m &= m - 1) {
            image |= std::uint32_t{1} << sigma[static_cast<std::size_t>(std::countr_zero(m))];
        }
        out[sigma[v]] = image;
    }
    return out;
}

struct SmallOrbit {
    std::vector<PackedKey> keys;
    std::vector<Rows> members;
    std::unordered_set<PackedKey, PackedKeyHash> seen;
};

SmallOrbit small_orbit(const Graph &g) {
    const std::size_t n = g.size();
    SmallOrbit orbit;
    const Rows start = to_rows(g);
    orbit.seen.insert(pack(start, n));
    orbit.members.push_back(start);
    for (std::size_t head = 0; head < orbit.members.size(); head++) {
        for (std::size_t a = 0; a < n; a++) {
            Rows next = orbit.members[head];
            if (next[a] == 0) {
                continue;
            }
            complement_rows(next, a);
            if (orbit.seen.insert(pack(next, n)).second) {
                orbit.members.push_back(next);
            }
        }
    }
    std::vector<std::pair<PackedKey, std::size_t>> order;
    order.reserve(orbit.members.size());
    for (std::size_t i = 0; i < orbit.members.size(); i++) {
        order.emplace_back(pack(orbit.members[i], n), i);
    }
    std::sort(order.begin(), order.end());
    std::vector<Rows> sorted;
    sorted.reserve(order.size());
    for (const auto &[key, i] : order) {
        orbit.keys.push_back(key);
        sorted.push_back(orbit.members[i]);
    }
    orbit.members = std::move(sorted);
    return orbit;
}

std::vector<Graph> large_orbit(const Graph &g) {
    std::map<std::string, Graph> seen;
    std::deque<Graph> queue{g};
    seen.emplace(graph6_encode(g), g);
    while (!queue.empty()) {
        Graph current = std::move(queue.front());
        queue.pop_front();
        for (std::size_t a = 0; a < current.size(); a++) {
            Graph next = local_complement(current, a);
            if (seen.emplace(graph6_encode(next), next).second) {
                queue.push_back(std::move(next));
            }
        }
    }
    std::vector<Graph> members;
    for (auto &[key, graph] : seen) {
        members.push_back(std::move(graph));
    }
    return members;
}

void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)> &fn) {
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; i++) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < workers; t++) {
        threads.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

void check_guard(std::size_t n, std::size_t limit, bool force, const char *what) {
    if (n > limit && !force) {
        throw GuardError(std::string(what) + " limited to " + std::to_string(limit) + " vertices (got " +
                         std::to_string(n) + "); pass force to override");
    }
}

BigInt factorial(std::size_t k) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= k; i++) {
        f *= i;
    }
    return f;
}

using PermCode = std::uint64_t;

PermCode encode(const Permutation &p) {
    PermCode code = 0;
    for (std::size_t v = 0; v < p.size(); v++) {
        code |= static_cast<PermCode>(p[v]) << (4 * v);
    }
    return code;
}

std::size_t image(PermCode p, std::size_t v) {
    return static_cast<std::size_t>((p >> (4 * v)) & 0xF);
}

// (a * b)(v) = a(b(v)).
PermCode compose(PermCode a, PermCode b, std::size_t n) {
    PermCode out = 0;
    for (std::size_t v = 0; v < n; v++) {
        out |= static_cast<PermCode>(image(a, image(b, v))) << (4 * v);
    }
    return out;
}

std::size_t closure_order(const std::vector<PermCode> &gens, std::size_t n) {
    Permutation id(n);
    std::iota(id.begin(), id.end(), std::size_t{0});
    std::unordered_set<PermCode> group{encode(id)};
    std::vector<PermCode> queue{encode(id)};
    for (std::size_t head = 0; head < queue.size(); head++) {
        for (PermCode g : gens) {
            PermCode x = compose(g, queue[head], n);
            if (group.insert(x).second) {
                queue.push_back(x);
            }
        }
    }
    return group.size();
}

}  // namespace

OrbitReport lc_orbit(const Graph &g, bool store_members, bool force) {
    check_guard(g.size(), kMaxOrbitVertices, force, "lc_orbit");
    OrbitReport report;
    report.representative = g;
    std::vector<Graph> members;
    if (g.size() <= kMaxOrbitVertices) {
        SmallOrbit orbit = small_orbit(g);
        members.reserve(orbit.members.size());
        for (const auto &rows : orbit.members) {
            members.push_back(from_rows(rows, g.size()));
        }
    } else {
        members = large_orbit(g);
    }
    std::unordered_set<std::string> classes;
    for (const auto &m : members) {
        classes.insert(canonical_key(m));
    }
    report.labeled_size = members.size();
    report.class_size = classes.size();
    if (store_members) {
        report.members = std::move(members);
    }
    return report;
}

namespace {

std::mutex cache_mutex;
std::map<std::size_t, std::vector<std::string>> all_class_cache;
std::map<std::pair<std::size_t, bool>, ClassCensus> census_cache;

const std::vector<std::string> &all_isomorphism_classes(std::size_t n, std::size_t workers) {
    {
        std::lock_guard lock(cache_mutex);
        auto it = all_class_cache.find(n);
        if (it != all_class_cache.end()) {
            return it->second;
        }
    }
    std::vector<std::string> keys;
    if (n <= 1) {
        keys.push_back(canonical_key(Graph(n)));
    } else {
        const auto &previous = all_isomorphism_classes(n - 1, workers);
        std::vector<std::vector<std::string>> found(previous.size());
        parallel_for(previous.size(), workers, [&](std::size_t i) {
            const Graph base = graph6_decode(previous[i]);
            const auto edges = base.edges();
            std::set<std::string> local;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); mask++) {
                GraphBuilder builder(n);
                for (auto [u, v] : edges) {
                    builder.add_edge(u, v);
                }
                for (std::size_t u = 0; u + 1 < n; u++) {
                    if ((mask >> u) & 1) {
                        builder.add_edge(u, n - 1);
                    }
                }
                local.insert(canonical_key(std::move(builder).build()));
            }
            found[i].assign(local.begin(), local.end());
        });
        std::set<std::string> merged;
        for (auto &f : found) {
            merged.insert(f.begin(), f.end());
        }
        keys.assign(merged.begin(), merged.end());
    }
    std::lock_guard lock(cache_mutex);
    return all_class_cache.emplace(n, std::move(keys)).first->second;
}

}  // namespace

std::vector<std::string> isomorphism_classes(std::size_t n, bool connected_only, std::size_t workers, bool force) {
    check_guard(n, kMaxClassVertices, force, "isomorphism_classes");
    const auto &all = all_isomorphism_classes(n, workers);
    if (!connected_only) {
        return all;
    }
    std::vector<std::string> connected;
    for (const auto &key : all) {
        if (is_connected(graph6_decode(key))) {
            connected.push_back(key);
        }
    }
    return connected;
}

ClassCensus lc_classes(std::size_t n, bool connected_only, std::size_t workers, bool force) {
    check_guard(n, kMaxClassVertices, force, "lc_classes");
    {
        std::lock_guard lock(cache_mutex);
        auto it = census_cache.find({n, connected_only});
        if (it != census_cache.end()) {
            return it->second;
        }
    }
    const auto keys = isomorphism_classes(n, connected_only, workers, force);
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < keys.size(); i++) {
        index.emplace(keys[i], i);
    }
    std::vector<std::vector<std::size_t>> neighbours(keys.size());
    parallel_for(keys.size(), workers, [&](std::size_t i) {
        const Graph g = graph6_decode(keys[i]);
        for (std::size_t a = 0; a < n; a++) {
            neighbours[i].push_back(index.at(canonical_key(local_complement(g, a))));
        }
    });

    ClassCensus census;
    census.n = n;
    census.connected_only = connected_only;
    std::vector<bool> visited(keys.size(), false);
    for (std::size_t i = 0; i < keys.size(); i++) {
        if (visited[i]) {
            continue;
        }
        visited[i] = true;
        std::vector<std::size_t> queue{i};
        for (std::size_t head = 0; head < queue.size(); head++) {
            for (std::size_t j : neighbours[queue[head]]) {
                if (!visited[j]) {
                    visited[j] = true;
                    queue.push_back(j);
                }
            }
        }
        census.representatives.push_back(graph6_decode(keys[i]));
        census.class_sizes.push_back(queue.size());
    }
    std::lock_guard lock(cache_mutex);
    census_cache.emplace(std::make_pair(n, connected_only), census);
    return census;
}

AutBounds aut_bounds(const FoliagePartition &partition) {
    AutBounds bounds;
    for (std::size_t s : partition.part_sizes()) {
        bounds.size_counts[s]++;
    }
    bounds.lower = 1;
    bounds.out_upper = 1;
    for (auto [size, count] : bounds.size_counts) {
        const BigInt f = factorial(size);
        for (std::size_t i = 0; i < count; i++) {
            bounds.lower *= f;
        }
        bounds.out_upper *= factorial(count);
    }
    bounds.upper = bounds.lower * bounds.out_upper;
    return bounds;
}

std::vector<Permutation> aut_in_group(const FoliagePartition &partition) {
    std::vector<Permutation> gens;
    const std::size_t n = partition.universe();
    for (const auto &part : partition.parts()) {
        for (std::size_t i = 0; i + 1 < part.size(); i++) {
            Permutation p(n);
            std::iota(p.begin(), p.end(), std::size_t{0});
            std::swap(p[part[i]], p[part[i + 1]]);
            gens.push_back(std::move(p));
        }
    }
    return gens;
}

Permutation induced_part_permutation(const FoliagePartition &partition, const Permutation &sigma) {
    Permutation f(partition.size());
    for (std::size_t i = 0; i < partition.size(); i++) {
        f[i] = partition.part_of(sigma.at(partition.part(i).front()));
    }
    return f;
}

bool is_lc_automorphism(const Graph &g, const Permutation &sigma) {
    if (sigma.size() != g.size()) {
        throw std::invalid_argument("permutation size does not match graph");
    }
    check_guard(g.size(), kMaxOrbitVertices, false, "is_lc_automorphism");
    const Graph image = g.permuted(sigma);
    if (g.size() == 0) {
        return true;
    }
    const SmallOrbit orbit = small_orbit(g);
    return orbit.seen.contains(pack(to_rows(image), g.size()));
}

AutReport lc_automorphism_group(const Graph &g, bool force) {
    const std::size_t n = g.size();
    check_guard(n, kMaxAutVertices, force, "lc_automorphism_group");
    if (n > kMaxOrbitVertices) {
        throw GuardError("lc_automorphism_group cannot exceed " + std::to_string(kMaxOrbitVertices) + " vertices");
    }
    AutReport report;
    report.partition = foliage_partition(g);
    const AutBounds bounds = aut_bounds(report.partition);
    report.aut_in_order = bounds.lower.convert_to<std::uint64_t>();
    report.aut_out_upper_order = bounds.out_upper.convert_to<std::uint64_t>();

    const SmallOrbit orbit = small_orbit(g);
    std::unordered_set<std::string> classes;
    for (const auto &rows : orbit.members) {
        classes.insert(canonical_key(from_rows(rows, n)));
    }
    report.labeled_size = orbit.members.size();
    report.class_size = classes.size();

    const Rows rows = to_rows(g);
    std::array<std::uint8_t, kMaxOrbitVertices> sigma{};
    std::iota(sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(n), std::uint8_t{0});
    std::vector<PermCode> elements;
    do {
        if (orbit.seen.contains(pack(permute_rows(rows, n, sigma), n))) {
            PermCode code = 0;
            for (std::size_t v = 0; v < n; v++) {
                code |= static_cast<PermCode>(sigma[v]) << (4 * v);
            }
            elements.push_back(code);
        }
    } while (std::next_permutation(sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(n)));
    report.order = elements.size();
    report.aut_out_order = report.order / report.aut_in_order;

    // Greedy: add the first element outside the current subgroup, then
    // drop generators that turn out redundant.
    std::vector<PermCode> gens;
    std::unordered_set<PermCode> subgroup{elements.empty() ? PermCode{0} : elements.front()};
    for (PermCode e : elements) {
        if (subgroup.contains(e)) {
            continue;
        }
        gens.push_back(e);
        Permutation id(n);
        std::iota(id.begin(), id.end(), std::size_t{0});
        subgroup = {encode(id)};
        std::vector<PermCode> queue{encode(id)};
        for (std::size_t head = 0; head < queue.size(); head++) {
            for (PermCode gen : gens) {
                PermCode x = compose(gen, queue[head], n);
                if (subgroup.insert(x).second) {
                    queue.push_back(x);
                }
            }
        }
    }
    for (std::size_t i = gens.size(); i-- > 0;) {
        std::vector<PermCode> rest = gens;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (closure_order(rest, n) == report.order) {
            gens = std::move(rest);
        }
    }
    for (PermCode code : gens) {
        Permutation p(n);
        for (std::size_t v = 0; v < n; v++) {
            p[v] = image(code, v);
        }
        report.part_permutations.push_back(induced_part_permutation(report.partition, p));
        report.generators.push_back(std::move(p));
    }
    report.statistic = BigRational(BigInt(report.order) * report.class_size, BigInt(report.labeled_size));
    return report;
}

SaturationStatsRow saturation_stats(std::size_t n, std::size_t workers, bool force) {
    const ClassCensus census = lc_classes(n, true, workers, force);
    if (census.count() == 0) {
        throw std::invalid_argument("no connected graphs on " + std::to_string(n) + " vertices");
    }
    std::vector<SaturationReport> reports(census.count());
    std::vector<char> reducible(census.count());
    parallel_for(census.count(), workers, [&](std::size_t i) {
        reports[i] = saturation(census.representatives[i]);
        reducible[i] = !foliage_partition(census.representatives[i]).is_trivial();
    });
    BigInt time = 0;
    BigInt size = 0;
    BigInt reducible_count = 0;
    BigInt full_count = 0;
    for (std::size_t i = 0; i < reports.size(); i++) {
        time += reports[i].time;
        size += reports[i].size;
        reducible_count += reducible[i] ? 1 : 0;
        full_count += reports[i].size == 1 ? 1 : 0;
    }
    const BigInt classes = census.count();
    SaturationStatsRow row;
    row.n = n;
    row.classes = census.count();
    row.avg_time = BigRational(time, classes);
    row.avg_size = BigRational(size, classes);
    row.reducible_ratio = BigRational(reducible_count, classes);
    row.fully_reducible_ratio = BigRational(full_count, classes);
    return row;
}

std::string format_fixed(const BigRational &value, unsigned places) {
    if (value < 0) {
        throw std::invalid_argument("format_fixed expects a non-negative value");
    }
    BigInt scale = 1;
    for (unsigned i = 0; i < places; i++) {
        scale *= 10;
    }
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    const BigInt scaled = (2 * num * scale + den) / (2 * den);
    std::string whole = BigInt(scaled / scale).str();
    if (places == 0) {
        return whole;
    }
    std::string frac = BigInt(scaled % scale).str();
    frac.insert(0, places - frac.size(), '0');
    return whole + "." + frac;
}

std::string to_csv(const SaturationStatsRow &row) {
    return format_fixed(row.avg_time, 2) + "," + format_fixed(row.avg_size, 2) + "," +
           format_fixed(row.reducible_ratio, 2) + "," + format_fixed(row.fully_reducible_ratio, 2);
}

std::vector<ClassTableRow> class_table(std::size_t n, std::size_t workers, bool force) {
    const ClassCensus census = lc_classes(n, true, workers, force);
    std::vector<ClassTableRow> rows(census.count());
    parallel_for(census.count(), workers, [&](std::size_t i) {
        rows[i].class_id = i + 1;
        rows[i].n = n;
        rows[i].representative = census.representatives[i];
        rows[i].aut = lc_automorphism_group(census.representatives[i], force);
        rows[i].part_sizes = rows[i].aut.partition.part_sizes();
    });
    return rows;
}

std::string class_table_csv(const std::vector<ClassTableRow> &rows) {
    std::ostringstream out;
    out << "class_id,n,partition,aut_in,aut_out_upper,aut_order,L,C,I\n";
    for (const auto &row : rows) {
        auto sizes = row.part_sizes;
        std::sort(sizes.rbegin(), sizes.rend());
        std::string partition;
        for (auto s : sizes) {
            partition += (partition.empty() ? "" : "+") + std::to_string(s);
        }
        out << row.class_id << ',' << row.n << ',' << partition << ',' << row.aut.aut_in_order << ','
            << row.aut.aut_out_upper_order << ',' << row.aut.order << ',' << row.aut.labeled_size << ','
            << row.aut.class_size << ',' << format_fixed(row.aut.statistic, 2) << '\n';
    }
    return out.str();
}

}  // namespace foliage
