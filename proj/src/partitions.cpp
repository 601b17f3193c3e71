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
#include "foliage/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace foliage {

BigInt partition_number(std::size_t n) {
    static std::mutex mutex;
    static std::vector<BigInt> memo{1};
    std::lock_guard lock(mutex);
    while (memo.size() <= n) {
        const auto m = static_cast<long long>(memo.size());
        BigInt total = 0;
        for (long long k = 1;; k++) {
            const long long g1 = k * (3 * k - 1) / 2;
            if (g1 > m) {
                break;
            }
            const long long g2 = k * (3 * k + 1) / 2;
            BigInt term = memo[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) {
                term += memo[static_cast<std::size_t>(m - g2)];
            }
            if (k % 2 == 1) {
                total += term;
            } else {
                total -= term;
            }
        }
        memo.push_back(std::move(total));
    }
    return memo[n];
}

BigInt class_lower_bound(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("class_lower_bound needs n >= 2");
    }
    return partition_number(n) - static_cast<long long>(std::min<std::size_t>(3, n - 2));
}

bool is_exceptional_partition(std::span<const std::size_t> parts) {
    const std::size_t k = parts.size();
    if (k < 2 || k > 4) {
        return false;
    }
    return std::all_of(parts.begin(), parts.end() - 1, [](std::size_t p) { return p == 1; });
}

Graph graph_for_partition(std::span<const std::size_t> parts) {
    if (parts.empty()) {
        throw std::invalid_argument("partition must have at least one part");
    }
    for (std::size_t i = 0; i < parts.size(); i++) {
        if (parts[i] == 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts[i] < parts[i - 1]) {
            throw std::invalid_argument("partition parts must be non-decreasing");
        }
    }
    if (is_exceptional_partition(parts)) {
        std::string text;
        for (auto p : parts) {
            text += (text.empty() ? "" : ",") + std::to_string(p);
        }
        throw std::invalid_argument("no graph exists with foliage part sizes " + text);
    }
    std::size_t n = 0;
    std::vector<std::size_t> centers;
    for (auto p : parts) {
        centers.push_back(n);
        n += p;
    }
    GraphBuilder builder(n);
    for (std::size_t i = 0; i < parts.size(); i++) {
        for (std::size_t leaf = 1; leaf < parts[i]; leaf++) {
            builder.add_edge(centers[i], centers[i] + leaf);
        }
    }
    const std::size_t k = centers.size();
    if (k == 2) {
        builder.add_edge(centers[0], centers[1]);
    } else if (k >= 3) {
        for (std::size_t i = 0; i < k; i++) {
            builder.add_edge(centers[i], centers[(i + 1) % k]);
        }
    }
    return std::move(builder).build();
}

}  // namespace foliage
