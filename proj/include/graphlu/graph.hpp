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

#include <cstddef>
#include <utility>
#include <vector>

#include "graphlu/vertex_set.hpp"

namespace graphlu {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1, stored as bit-packed adjacency
// rows. The vertex order used by the standard form is the integer order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const { return rows_.size(); }
  VertexSet vertices() const { return VertexSet::range(rows_.size()); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].size(); }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle_edge(Vertex u, Vertex v);

  // Complement the subgraph induced on `s` (no diagonal).
  void toggle_clique(const VertexSet& s);

  // In-place versions of local_complement / pivot.
  void local_complement_in_place(Vertex v);
  void pivot_in_place(Vertex u, Vertex v);

  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const;
  std::vector<VertexSet> rows_;
};

// Odd(D): vertices with an odd number of neighbours in d.
VertexSet odd_neighborhood(const Graph& g, const VertexSet& d);
// Vertices adjacent to every member of k. Rejects empty k.
VertexSet common_neighborhood(const Graph& g, const VertexSet& k);
// Vertices outside s with at least one neighbour in s.
VertexSet strict_neighborhood(const Graph& g, const VertexSet& s);
VertexSet closed_neighborhood(const Graph& g, Vertex v);

Graph local_complement(const Graph& g, Vertex v);
// g ⋆u ⋆v ⋆u. Rejects non-adjacent u, v.
Graph pivot(const Graph& g, Vertex u, Vertex v);

// Subgraph on `keep`, renumbered by increasing original id.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// Unordered non-adjacent pairs with equal neighbourhoods, u < v.
std::vector<Edge> twins(const Graph& g);

bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);
// Components as vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace graphlu
