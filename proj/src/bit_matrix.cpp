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
#include "foliage/bit_matrix.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string>

namespace foliage {

VertexSubset::VertexSubset(std::size_t universe) : universe_(universe), words_(words_for_bits(universe), 0) {
}

VertexSubset::VertexSubset(std::size_t universe, std::initializer_list<std::size_t> members)
    : VertexSubset(universe) {
    for (auto v : members) {
        insert(v);
    }
}

VertexSubset VertexSubset::from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe < 64 && (mask >> universe) != 0) {
        throw std::out_of_range("subset mask has bits outside the vertex range");
    }
    VertexSubset s(universe);
    if (!s.words_.empty()) {
        s.words_[0] = mask;
    }
    return s;
}

VertexSubset VertexSubset::from_members(std::size_t universe, std::span<const std::size_t> members) {
    VertexSubset s(universe);
    for (auto v : members) {
        s.insert(v);
    }
    return s;
}

VertexSubset VertexSubset::full(std::size_t universe) {
    return VertexSubset(universe).complement();
}

bool VertexSubset::contains(std::size_t v) const {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1);
}

void VertexSubset::insert(std::size_t v) {
    if (v >= universe_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside subset universe");
    }
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSubset::erase(std::size_t v) {
    if (v < universe_) {
        words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    }
}

std::size_t VertexSubset::count() const {
    std::size_t total = 0;
    for (auto w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool VertexSubset::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

VertexSubset VertexSubset::complement() const {
    VertexSubset out(universe_);
    for (std::size_t i = 0; i < words_.size(); i++) {
        out.words_[i] = ~words_[i];
    }
    if (universe_ % kWordBits != 0) {
        out.words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
    }
    return out;
}

std::vector<std::size_t> VertexSubset::members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); i++) {
        Word w = words_[i];
        while (w) {
            out.push_back(i * kWordBits + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::size_t VertexSubset::first() const {
    for (std::size_t i = 0; i < words_.size(); i++) {
        if (words_[i]) {
            return i * kWordBits + std::countr_zero(words_[i]);
        }
    }
    return universe_;
}

std::uint64_t VertexSubset::mask() const {
    if (universe_ > 64) {
        throw std::logic_error("VertexSubset::mask requires a universe of at most 64 vertices");
    }
    return words_.empty() ? 0 : words_[0];
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for_bits(cols)), data_(rows * stride_, 0) {
    row_labels_.resize(rows);
    col_labels_.resize(cols);
    for (std::size_t i = 0; i < rows; i++) {
        row_labels_[i] = i;
    }
    for (std::size_t j = 0; j < cols; j++) {
        col_labels_[j] = j;
    }
}

BitMatrix::BitMatrix(std::vector<std::size_t> row_labels, std::vector<std::size_t> col_labels)
    : rows_(row_labels.size()),
      cols_(col_labels.size()),
      stride_(words_for_bits(col_labels.size())),
      data_(rows_ * stride_, 0),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
}

BitMatrix BitMatrix::from_rows(std::initializer_list<const char *> rows) {
    std::size_t cols = rows.size() == 0 ? 0 : std::strlen(*rows.begin());
    BitMatrix m(rows.size(), cols);
    std::size_t r = 0;
    for (const char *text : rows) {
        if (std::strlen(text) != cols) {
            throw std::invalid_argument("ragged bit matrix rows");
        }
        for (std::size_t c = 0; c < cols; c++) {
            if (text[c] != '0' && text[c] != '1') {
                throw std::invalid_argument("bit matrix rows must contain only '0' and '1'");
            }
            m.set(r, c, text[c] == '1');
        }
        r++;
    }
    return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    Word &w = data_[r * stride_ + c / kWordBits];
    Word bit = Word{1} << (c % kWordBits);
    w = value ? (w | bit) : (w & ~bit);
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix out(col_labels_, row_labels_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            if (get(r, c)) {
                out.set(c, r, true);
            }
        }
    }
    return out;
}

std::size_t gf2_rank(const BitMatrix &m) {
    const std::size_t stride = m.stride();
    std::vector<Word> work(m.rows() * stride);
    for (std::size_t r = 0; r < m.rows(); r++) {
        auto src = m.row(r);
        std::copy(src.begin(), src.end(), work.begin() + r * stride);
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); c++) {
        const std::size_t wi = c / kWordBits;
        const Word bit = Word{1} << (c % kWordBits);
        std::size_t pivot = rank;
        while (pivot < m.rows() && !(work[pivot * stride + wi] & bit)) {
            pivot++;
        }
        if (pivot == m.rows()) {
            continue;
        }
        if (pivot != rank) {
            std::swap_ranges(work.begin() + pivot * stride, work.begin() + (pivot + 1) * stride,
                             work.begin() + rank * stride);
        }
        for (std::size_t r = rank + 1; r < m.rows(); r++) {
            if (work[r * stride + wi] & bit) {
                for (std::size_t k = wi; k < stride; k++) {
                    work[r * stride + k] ^= work[rank * stride + k];
                }
            }
        }
        rank++;
    }
    return rank;
}

std::size_t gf2_rank_words(std::span<const std::uint64_t> rows) {
    std::uint64_t basis[64];
    std::size_t rank = 0;
    for (auto r : rows) {
        // Reduce against the basis, which is kept keyed by leading bit.
        for (std::size_t i = 0; i < rank && r; i++) {
            r = std::min(r, r ^ basis[i]);
        }
        if (r) {
            basis[rank++] = r;
            std::sort(basis, basis + rank, std::greater<>());
        }
    }
    return rank;
}

}  // namespace foliage
