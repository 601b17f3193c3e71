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

#include <istream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace foliage {

namespace {

constexpr char kHeader[] = ">>graph6<<";

void append_size(std::string &out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= kMaxGraph6Vertices) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6 encoding supports at most " + std::to_string(kMaxGraph6Vertices) +
                                    " vertices");
    }
}

int sextet(char c) {
    auto u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126) {
        throw std::invalid_argument("graph6 character " + std::to_string(u) + " outside 63..126");
    }
    return u - 63;
}

}  // namespace

std::string graph6_encode(const Graph &g) {
    const std::size_t n = g.size();
    std::string out;
    append_size(out, n);
    int acc = 0;
    int filled = 0;
    // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    for (std::size_t j = 1; j < n; j++) {
        for (std::size_t i = 0; i < j; i++) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    }
    return out;
}

Graph graph6_decode(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    if (text.starts_with(kHeader)) {
        text.remove_prefix(sizeof(kHeader) - 1);
    }
    if (text.empty()) {
        throw std::invalid_argument("empty graph6 string");
    }
    std::size_t pos = 0;
    std::size_t n = 0;
    if (text[0] == 126) {
        if (text.size() >= 2 && text[1] == 126) {
            throw std::invalid_argument("graph6 8-byte size field is not supported");
        }
        if (text.size() < 4) {
            throw std::invalid_argument("truncated graph6 size field");
        }
        n = (static_cast<std::size_t>(sextet(text[1])) << 12) | (static_cast<std::size_t>(sextet(text[2])) << 6) |
            static_cast<std::size_t>(sextet(text[3]));
        pos = 4;
    } else {
        n = static_cast<std::size_t>(sextet(text[0]));
        pos = 1;
    }
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (text.size() - pos < expected) {
        throw std::invalid_argument("truncated graph6 bit vector: expected " + std::to_string(expected) +
                                    " data bytes, found " + std::to_string(text.size() - pos));
    }
    if (text.size() - pos > expected) {
        throw std::invalid_argument("trailing characters after graph6 bit vector");
    }
    GraphBuilder builder(n);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; j++) {
        for (std::size_t i = 0; i < j; i++, k++) {
            int value = sextet(text[pos + k / 6]);
            if ((value >> (5 - k % 6)) & 1) {
                builder.add_edge(i, j);
            }
        }
    }
    for (std::size_t b = pos; b < text.size(); b++) {
        sextet(text[b]);
    }
    return std::move(builder).build();
}

std::vector<Graph> read_graph6_lines(std::istream &in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        out.push_back(graph6_decode(line));
    }
    return out;
}

WeightedGraph parse_weighted(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    bool have_header = false;
    std::int64_t d = 0;
    std::size_t n = 0;
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> edges;
    std::vector<std::vector<char>> seen;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        auto fail = [&](const std::string &why) {
            return std::invalid_argument("weighted graph line " + std::to_string(line_no) + ": " + why);
        };
        if (!have_header) {
            std::string dk, nk;
            long long dv = 0, nv = 0;
            if (!(fields >> dk >> dv >> nk >> nv) || dk != "d" || nk != "n" || nv < 0) {
                throw fail("expected header 'd <modulus> n <count>'");
            }
            d = dv;
            n = static_cast<std::size_t>(nv);
            if (!is_prime(d)) {
                throw fail("modulus " + std::to_string(d) + " is not prime");
            }
            seen.assign(n, std::vector<char>(n, 0));
            have_header = true;
        } else {
            long long u = 0, v = 0, w = 0;
            if (!(fields >> u >> v >> w)) {
                throw fail("expected 'u v w'");
            }
            if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
                throw fail("vertex outside [0," + std::to_string(n) + ")");
            }
            if (u == v) {
                throw fail("self-loop");
            }
            if (w < 1 || w >= d) {
                throw fail("weight must lie in [1," + std::to_string(d) + ")");
            }
            auto a = static_cast<std::size_t>(u), b = static_cast<std::size_t>(v);
            if (seen[a][b]) {
                throw fail("duplicate pair");
            }
            seen[a][b] = seen[b][a] = 1;
            edges.emplace_back(a, b, w);
        }
        std::string extra;
        if (fields >> extra) {
            throw fail("unexpected trailing field '" + extra + "'");
        }
    }
    if (!have_header) {
        throw std::invalid_argument("weighted graph text has no header");
    }
    return build_weighted_graph(n, d, edges);
}

std::string format_weighted(const WeightedGraph &g) {
    std::ostringstream out;
    out << "d " << g.modulus() << " n " << g.size() << "\n";
    for (std::size_t u = 0; u < g.size(); u++) {
        for (std::size_t v = u + 1; v < g.size(); v++) {
            if (g.weight(u, v) != 0) {
                out << u << " " << v << " " << g.weight(u, v) << "\n";
            }
        }
    }
    return out.str();
}

}  // namespace foliage
