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
#include "foliage/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "foliage/io.hpp"

namespace foliage {

namespace {

using Cell = std::vector<std::size_t>;
using Partition = std::vector<Cell>;

class Canonizer {
   public:
    explicit Canonizer(const Graph &g) : g_(g), n_(g.size()), stride_(g.stride()), parent_(g.size()) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    CanonicalForm run() {
        Partition root;
        if (n_ > 0) {
            Cell all(n_);
            std::iota(all.begin(), all.end(), 0);
            root.push_back(std::move(all));
        }
        refine(root);
        search(root, 0);
        CanonicalForm out;
        out.relabeling = best_labeling_;
        out.key = graph6_encode(g_.permuted(best_labeling_));
        return out;
    }

   private:
    std::size_t neighbors_in(std::size_t v, const std::vector<Word> &mask) const {
        auto row = g_.row(v);
        std::size_t c = 0;
        for (std::size_t k = 0; k < stride_; k++) {
            c += std::popcount(row[k] & mask[k]);
        }
        return c;
    }

    // Splits cells by neighbor counts into splitter cells until the
    // partition is equitable. Fragments are ordered by count, which keeps
    // the result independent of vertex labels.
    void refine(Partition &p) const {
        std::vector<Word> mask(stride_);
        std::vector<std::pair<std::size_t, std::size_t>> keyed;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < p.size() && !changed; s++) {
                std::fill(mask.begin(), mask.end(), 0);
                for (auto v : p[s]) {
                    mask[v / kWordBits] |= Word{1} << (v % kWordBits);
                }
                for (std::size_t c = 0; c < p.size(); c++) {
                    if (p[c].size() < 2) {
                        continue;
                    }
                    keyed.clear();
                    for (auto v : p[c]) {
                        keyed.emplace_back(neighbors_in(v, mask), v);
                    }
                    std::sort(keyed.begin(), keyed.end());
                    if (keyed.front().first == keyed.back().first) {
                        continue;
                    }
                    Partition pieces;
                    for (std::size_t i = 0; i < keyed.size(); i++) {
                        if (i == 0 || keyed[i].first != keyed[i - 1].first) {
                            pieces.emplace_back();
                        }
                        pieces.back().push_back(keyed[i].second);
                    }
                    p.erase(p.begin() + static_cast<std::ptrdiff_t>(c));
                    p.insert(p.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    bool twins(std::size_t u, std::size_t w) const {
        auto ru = g_.row(u);
        auto rw = g_.row(w);
        for (std::size_t k = 0; k < stride_; k++) {
            Word ignore = 0;
            if (u / kWordBits == k) {
                ignore |= Word{1} << (u % kWordBits);
            }
            if (w / kWordBits == k) {
                ignore |= Word{1} << (w % kWordBits);
            }
            if ((ru[k] & ~ignore) != (rw[k] & ~ignore)) {
                return false;
            }
        }
        return true;
    }

    std::size_t find(std::size_t v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    void record_automorphism(const std::vector<std::size_t> &labeling) {
        // best_labeling_^{-1} o labeling maps each vertex to its image.
        std::vector<std::size_t> inverse_best(n_);
        for (std::size_t v = 0; v < n_; v++) {
            inverse_best[best_labeling_[v]] = v;
        }
        for (std::size_t v = 0; v < n_; v++) {
            auto a = find(v);
            auto b = find(inverse_best[labeling[v]]);
            if (a != b) {
                parent_[std::max(a, b)] = std::min(a, b);
            }
        }
    }

    void visit_leaf(const Partition &p) {
        std::vector<std::size_t> labeling(n_);
        for (std::size_t i = 0; i < p.size(); i++) {
            labeling[p[i][0]] = i;
        }
        // Row i of the relabeled graph, as a bit string over new labels.
        std::vector<Word> rows(n_ * stride_, 0);
        for (std::size_t v = 0; v < n_; v++) {
            Word *dst = rows.data() + labeling[v] * stride_;
            for (auto w : g_.neighbors(v)) {
                auto lw = labeling[w];
                dst[lw / kWordBits] |= Word{1} << (lw % kWordBits);
            }
        }
        if (best_labeling_.empty()) {
            best_rows_ = std::move(rows);
            best_labeling_ = std::move(labeling);
            return;
        }
        if (rows < best_rows_) {
            best_rows_ = std::move(rows);
            best_labeling_ = std::move(labeling);
        } else if (rows == best_rows_) {
            record_automorphism(labeling);
        }
    }

    void search(const Partition &p, std::size_t depth) {
        std::size_t target = p.size();
        for (std::size_t i = 0; i < p.size(); i++) {
            if (p[i].size() > 1) {
                target = i;
                break;
            }
        }
        if (target == p.size()) {
            visit_leaf(p);
            return;
        }
        const Cell &cell = p[target];
        std::vector<std::size_t> tried;
        for (auto v : cell) {
            bool redundant = false;
            for (auto t : tried) {
                if (twins(v, t) || (depth == 0 && find(v) == find(t))) {
                    redundant = true;
                    break;
                }
            }
            if (redundant) {
                continue;
            }
            tried.push_back(v);
            Partition child;
            child.reserve(p.size() + 1);
            for (std::size_t i = 0; i < p.size(); i++) {
                if (i == target) {
                    child.push_back({v});
                    Cell rest;
                    for (auto w : cell) {
                        if (w != v) {
                            rest.push_back(w);
                        }
                    }
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(p[i]);
                }
            }
            refine(child);
            search(child, depth + 1);
        }
    }

    const Graph &g_;
    std::size_t n_;
    std::size_t stride_;
    std::vector<std::size_t> parent_;
    std::vector<Word> best_rows_;
    std::vector<std::size_t> best_labeling_;
};

}  // namespace

CanonicalForm canonical_form(const Graph &g) {
    if (g.size() == 0) {
        return {graph6_encode(g), {}};
    }
    return Canonizer(g).run();
}

std::string canonical_key(const Graph &g) {
    return canonical_form(g).key;
}

}  // namespace foliage
