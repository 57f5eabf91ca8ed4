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

#pragma once

#include "graphlu/graph.hpp"
#include "graphlu/multiset.hpp"

namespace fixtures {

// a..f = 0..5.
inline constexpr graphlu::Vertex A = 0, B = 1, C = 2, D = 3, E = 4, F = 5;

// Six-vertex example: a ~ d, e, f; b, c ~ e, f; d ~ e; e ~ f.
inline graphlu::Graph six_vertex() {
  return graphlu::Graph::from_edges(6, {{A, D}, {A, E}, {A, F}, {B, E}, {B, F}, {C, E}, {C, F}, {D, E}, {E, F}});
}

// {a:2, b:1, c:1} at level 2.
inline graphlu::VertexMultiset six_vertex_multiset() {
  graphlu::VertexMultiset s(2);
  s.set(A, 2);
  s.set(B, 1);
  s.set(C, 1);
  return s;
}

inline graphlu::Graph path(std::size_t n) {
  std::vector<graphlu::Edge> e;
  for (graphlu::Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return graphlu::Graph::from_edges(n, e);
}

inline graphlu::Graph star(std::size_t n) {
  std::vector<graphlu::Edge> e;
  for (graphlu::Vertex v = 1; v < n; ++v) e.emplace_back(0, v);
  return graphlu::Graph::from_edges(n, e);
}

inline graphlu::Graph complete(std::size_t n) {
  std::vector<graphlu::Edge> e;
  for (graphlu::Vertex u = 0; u < n; ++u) {
    for (graphlu::Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return graphlu::Graph::from_edges(n, e);
}

inline graphlu::Graph cycle(std::size_t n) {
  std::vector<graphlu::Edge> e;
  for (graphlu::Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<graphlu::Vertex>((v + 1) % n));
  return graphlu::Graph::from_edges(n, e);
}

}  // namespace fixtures
