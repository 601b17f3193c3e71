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
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "foliage/graph.hpp"

namespace foliage {

using BigInt = boost::multiprecision::cpp_int;

/// Number of integer partitions p(n), from Euler's pentagonal-number
/// recurrence p(n) = sum_k (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
///
/// Asymptotically p(n) ~ exp(pi * sqrt(2n/3)) / (4 n sqrt(3)).
BigInt partition_number(std::size_t n);

/// Lower bound p(n) - min(3, n - 2) on the number of LC-classes of
/// n-vertex graphs; throws std::invalid_argument for n < 2.
BigInt class_lower_bound(std::size_t n);

/// Whether no connected graph has foliage part sizes equal to the given
/// non-decreasing partition: (1, n-1), (1, 1, n-2) and (1, 1, 1, n-3).
bool is_exceptional_partition(std::span<const std::size_t> parts);

/// Connected graph whose foliage partition has exactly the given part
/// sizes (non-decreasing, positive). Block i is a star on parts[i]
/// vertices whose centers are joined in a cycle (a single edge for two
/// blocks). Vertices are numbered block by block, center first.
Graph graph_for_partition(std::span<const std::size_t> parts);

}  // namespace foliage
