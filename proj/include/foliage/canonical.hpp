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

#include <string>
#include <vector>

#include "foliage/graph.hpp"

namespace foliage {

struct CanonicalForm {
    /// graph6 text of the canonical representative; equal for isomorphic graphs.
    std::string key;
    /// relabeling[v] is the canonical label of vertex v, so that
    /// g.permuted(relabeling) is the canonical representative.
    std::vector<std::size_t> relabeling;
};

/// Canonical labeling by equitable refinement plus individualization
/// search. Branches are pruned by twin transpositions and, at the root,
/// by automorphisms found at earlier leaves.
CanonicalForm canonical_form(const Graph &g);

/// Shorthand for canonical_form(g).key.
std::string canonical_key(const Graph &g);

}  // namespace foliage
