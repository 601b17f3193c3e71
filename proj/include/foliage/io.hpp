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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "foliage/graph.hpp"
#include "foliage/weighted_graph.hpp"

namespace foliage {

/// Largest vertex count representable with the 4-byte graph6 size field.
inline constexpr std::size_t kMaxGraph6Vertices = 258047;

/// graph6 text of g (no trailing newline).
std::string graph6_encode(const Graph &g);

/// Parses one graph6 line. Accepts an optional ">>graph6<<" prefix and a
/// trailing newline. Throws std::invalid_argument on malformed input.
Graph graph6_decode(std::string_view text);

/// Reads every non-empty graph6 line of a stream.
std::vector<Graph> read_graph6_lines(std::istream &in);

/// Weighted-graph text: a header `d <modulus> n <count>` followed by
/// `u v w` lines with w in [1, d). Blank lines and lines starting with
/// '#' are ignored. Pairs not listed have weight 0.
WeightedGraph parse_weighted(std::string_view text);
std::string format_weighted(const WeightedGraph &g);

}  // namespace foliage
