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
#include "foliage/io.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "test_util.hpp"

namespace foliage {
namespace {

using testing::random_graph;

TEST(Graph6, SmallCliques) {
    EXPECT_EQ(graph6_encode(complete_graph(2)), "A_");
    EXPECT_EQ(graph6_encode(complete_graph(3)), "Bw");
    EXPECT_EQ(graph6_decode("A_"), complete_graph(2));
    EXPECT_EQ(graph6_decode("Bw"), complete_graph(3));
}

// Strings produced by an independent reference encoder.
TEST(Graph6, ReferenceStrings) {
    EXPECT_EQ(graph6_encode(Graph(0)), "?");
    EXPECT_EQ(graph6_encode(Graph(1)), "@");
    EXPECT_EQ(graph6_encode(path_graph(4)), "Ch");
    EXPECT_EQ(graph6_encode(cycle_graph(5)), "Dhc");
    EXPECT_EQ(graph6_encode(complete_bipartite_graph(2, 3)), "D]o");
    EXPECT_EQ(graph6_encode(path_graph(63)), "~??~hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G");
    EXPECT_EQ(graph6_encode(star_graph(64)), "~?@?saCCA?_C?O?_?_?O?C??_?A??C??C??A???_??C???O???_???_???O???C????_???A????C????C????A?????_????C?????O?????_?????_?????O?????C??????_?????A??????C??????C??????A???????_??????C???????O???????_???????_???????O???????C????????_???????A????????C????????C????????A?????????_????????C?????????O?????????_?????????_?????????O?????????C??????????");
    EXPECT_EQ(graph6_decode("~?@?saCCA?_C?O?_?_?O?C??_?A??C??C??A???_??C???O???_???_???O???C????_???A????C????C????A?????_????C?????O?????_?????_?????O?????C??????_?????A??????C??????C??????A???????_??????C???????O???????_???????_???????O???????C????????_???????A????????C????????C????????A?????????_????????C?????????O?????????_?????????_?????????O?????????C??????????"), star_graph(64));
}

TEST(Graph6, RoundTripRandom) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1000; trial++) {
        const Graph g = random_graph(rng() % 21, (rng() % 100) / 100.0, rng);
        const std::string text = graph6_encode(g);
        EXPECT_EQ(graph6_decode(text), g);
        EXPECT_EQ(graph6_encode(graph6_decode(text)), text);
    }
}

TEST(Graph6, RoundTripLarge) {
    std::mt19937_64 rng(6);
    for (std::size_t n : {62u, 63u, 64u, 300u}) {
        const Graph g = random_graph(n, 0.3, rng);
        EXPECT_EQ(graph6_decode(graph6_encode(g)), g);
    }
}

TEST(Graph6, HeaderAndNewline) {
    EXPECT_EQ(graph6_decode(">>graph6<<Bw\n"), complete_graph(3));
}

TEST(Graph6, Malformed) {
    EXPECT_THROW(graph6_decode(""), std::invalid_argument);
    EXPECT_THROW(graph6_decode("B "), std::invalid_argument);
    EXPECT_THROW(graph6_decode("D]"), std::invalid_argument);
    EXPECT_THROW(graph6_decode("Bww"), std::invalid_argument);
    EXPECT_THROW(graph6_decode("~?"), std::invalid_argument);
    EXPECT_THROW(graph6_decode("~~??????????"), std::invalid_argument);
}

TEST(Graph6, ReadLines) {
    std::istringstream in("A_\n\nBw\n");
    const auto graphs = read_graph6_lines(in);
    ASSERT_EQ(graphs.size(), 2u);
    EXPECT_EQ(graphs[1], complete_graph(3));
}

TEST(WeightedText, ParseAndFormat) {
    const WeightedGraph g = parse_weighted("# path\nd 3 n 3\n0 1 1\n1 2 2\n");
    EXPECT_EQ(g.modulus(), 3);
    EXPECT_EQ(g.weight(2, 1), 2);
    EXPECT_EQ(g.weight(0, 2), 0);
    EXPECT_EQ(format_weighted(g), "d 3 n 3\n0 1 1\n1 2 2\n");
    EXPECT_EQ(parse_weighted(format_weighted(g)), g);
}

TEST(WeightedText, RoundTripRandom) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; trial++) {
        const std::int64_t d = trial % 2 ? 5 : 3;
        const WeightedGraph g = testing::random_weighted_graph(rng() % 10, d, 0.5, rng);
        EXPECT_EQ(parse_weighted(format_weighted(g)), g);
    }
}

TEST(WeightedText, Errors) {
    EXPECT_THROW(parse_weighted(""), std::invalid_argument);
    EXPECT_THROW(parse_weighted("d 4 n 2\n"), std::invalid_argument);
    EXPECT_THROW(parse_weighted("d 3 n 2\n0 1 3\n"), std::invalid_argument);
    EXPECT_THROW(parse_weighted("d 3 n 2\n0 1 0\n"), std::invalid_argument);
    EXPECT_THROW(parse_weighted("d 3 n 2\n0 2 1\n"), std::invalid_argument);
    EXPECT_THROW(parse_weighted("d 3 n 2\n0 0 1\n"), std::invalid_argument);
    EXPECT_THROW(parse_weighted("d 3 n 2\n0 1 1\n1 0 2\n"), std::invalid_argument);
    EXPECT_THROW(parse_weighted("d 3 n 2\n0 1 1 7\n"), std::invalid_argument);
}

}  // namespace
}  // namespace foliage
