// Copyright 2026 The graphlu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphlu/graph6.hpp"

#include <cstdint>

#include "graphlu/errors.hpp"

namespace graphlu {

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  while (!text.empty() && (text.front() == ' ' || text.front() == '\n')) text.remove_prefix(1);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126) throw ParseError("graph6: orders above 258047 unsupported");
    if (text.size() < 4) throw ParseError("graph6: truncated order header");
    n = (static_cast<std::size_t>(text[1] - 63) << 12) | (static_cast<std::size_t>(text[2] - 63) << 6) |
        static_cast<std::size_t>(text[3] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw ResourceError("graph6: order " + std::to_string(n) + " exceeds the width limit");
  }
  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " body bytes for n=" +
                     std::to_string(n) + ", got " + std::to_string(text.size() - pos));
  }
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6) {
    const int last = text.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

}  // namespace graphlu
