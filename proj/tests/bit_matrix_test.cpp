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

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace foliage {
namespace {

// Textbook elimination on a dense 0/1 table.
std::size_t naive_rank(std::vector<std::vector<int>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); c++) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) {
            pivot++;
        }
        if (pivot == m.size()) {
            continue;
        }
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < m.size(); r++) {
            if (r != rank && m[r][c]) {
                for (std::size_t k = 0; k < cols; k++) {
                    m[r][k] ^= m[rank][k];
                }
            }
        }
        rank++;
    }
    return rank;
}

TEST(Gf2Rank, Identity) {
    EXPECT_EQ(gf2_rank(BitMatrix::from_rows({"100", "010", "001"})), 3u);
}

TEST(Gf2Rank, Zero) {
    EXPECT_EQ(gf2_rank(BitMatrix(4, 7)), 0u);
    EXPECT_EQ(gf2_rank(BitMatrix(0, 0)), 0u);
}

TEST(Gf2Rank, DependentThirdRow) {
    const BitMatrix m = BitMatrix::from_rows({"110", "011", "101"});
    const BitMatrix copy = m;
    EXPECT_EQ(gf2_rank(m), 2u);
    EXPECT_EQ(m, copy);
}

TEST(Gf2Rank, MatchesNaiveAndTranspose) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; trial++) {
        const std::size_t rows = rng() % 150;
        const std::size_t cols = rng() % 150;
        const double density = (rng() % 100) / 100.0;
        std::bernoulli_distribution coin(density);
        BitMatrix m(rows, cols);
        std::vector<std::vector<int>> dense(rows, std::vector<int>(cols));
        for (std::size_t r = 0; r < rows; r++) {
            for (std::size_t c = 0; c < cols; c++) {
                if (coin(rng)) {
                    m.set(r, c, true);
                    dense[r][c] = 1;
                }
            }
        }
        const std::size_t rank = gf2_rank(m);
        EXPECT_EQ(rank, naive_rank(dense));
        EXPECT_EQ(rank, gf2_rank(m.transpose()));
    }
}

TEST(Gf2Rank, WordsAgreeWithMatrix) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; trial++) {
        const std::size_t rows = rng() % 65;
        const std::size_t cols = 1 + rng() % 64;
        const std::uint64_t keep = cols == 64 ? ~0ull : ((1ull << cols) - 1);
        std::vector<std::uint64_t> words(rows);
        BitMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; r++) {
            words[r] = rng() & rng() & keep;
            for (std::size_t c = 0; c < cols; c++) {
                m.set(r, c, (words[r] >> c) & 1);
            }
        }
        EXPECT_EQ(gf2_rank_words(words), gf2_rank(m));
    }
}

TEST(BitMatrix, FromRowsAndLabels) {
    const BitMatrix m = BitMatrix::from_rows({"10", "01", "11"});
    EXPECT_EQ(m.rows(), 3u);
    EXPECT_EQ(m.cols(), 2u);
    EXPECT_TRUE(m.get(2, 0));
    EXPECT_FALSE(m.get(0, 1));
    const BitMatrix labeled({4, 7}, {1, 2, 9});
    EXPECT_EQ(labeled.rows(), 2u);
    EXPECT_EQ(labeled.cols(), 3u);
    EXPECT_EQ(labeled.col_labels()[2], 9u);
}

TEST(VertexSubset, Basics) {
    VertexSubset s(70, {0, 3, 69});
    EXPECT_EQ(s.count(), 3u);
    EXPECT_TRUE(s.contains(69));
    EXPECT_EQ(s.first(), 0u);
    EXPECT_EQ(s.complement().count(), 67u);
    s.erase(0);
    EXPECT_EQ(s.members(), (std::vector<std::size_t>{3, 69}));
    EXPECT_THROW(s.insert(70), std::out_of_range);
    EXPECT_TRUE(VertexSubset(5).empty());
    EXPECT_EQ(VertexSubset::full(5).mask(), 0b11111u);
}

TEST(VertexSubset, MaskRoundTrip) {
    for (std::uint64_t mask = 0; mask < 64; mask++) {
        EXPECT_EQ(VertexSubset::from_mask(6, mask).mask(), mask);
    }
    EXPECT_THROW(VertexSubset::from_mask(3, 0b1000), std::out_of_range);
}

}  // namespace
}  // namespace foliage
