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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace foliage {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for_bits(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

/// Membership bitmask over the vertex range [0, universe).
class VertexSubset {
   public:
    VertexSubset() = default;
    explicit VertexSubset(std::size_t universe);
    VertexSubset(std::size_t universe, std::initializer_list<std::size_t> members);

    static VertexSubset from_mask(std::size_t universe, std::uint64_t mask);
    static VertexSubset from_members(std::size_t universe, std::span<const std::size_t> members);
    static VertexSubset full(std::size_t universe);

    std::size_t universe() const {
        return universe_;
    }
    bool contains(std::size_t v) const;
    void insert(std::size_t v);
    void erase(std::size_t v);

    std::size_t count() const;
    bool empty() const;
    VertexSubset complement() const;
    std::vector<std::size_t> members() const;
    std::size_t first() const;

    /// Low 64 membership bits; valid when universe() <= 64.
    std::uint64_t mask() const;
    std::span<const Word> words() const {
        return words_;
    }

    bool operator==(const VertexSubset &other) const = default;

   private:
    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

/// Dense matrix over GF(2) with one bit-packed row per entry of
/// row_labels. Labels carry the vertex identities of submatrices.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    BitMatrix(std::vector<std::size_t> row_labels, std::vector<std::size_t> col_labels);

    /// Builds a matrix from strings of '0'/'1', one per row.
    static BitMatrix from_rows(std::initializer_list<const char *> rows);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    std::size_t stride() const {
        return stride_;
    }
    const std::vector<std::size_t> &row_labels() const {
        return row_labels_;
    }
    const std::vector<std::size_t> &col_labels() const {
        return col_labels_;
    }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool value);
    std::span<const Word> row(std::size_t r) const {
        return {data_.data() + r * stride_, stride_};
    }
    std::span<Word> row(std::size_t r) {
        return {data_.data() + r * stride_, stride_};
    }

    BitMatrix transpose() const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
    std::vector<std::size_t> row_labels_;
    std::vector<std::size_t> col_labels_;
};

/// Rank over GF(2) by word-parallel Gaussian elimination.
std::size_t gf2_rank(const BitMatrix &m);

/// Rank over GF(2) of up to 64 rows of at most 64 bits each.
std::size_t gf2_rank_words(std::span<const std::uint64_t> rows);

}  // namespace foliage
