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

#include "graphlu/graph.hpp"

#include <string>

#include "graphlu/errors.hpp"

namespace graphlu {

Graph::Graph(std::size_t n) {
  if (n > kMaxVertices) {
    throw ResourceError("graph order " + std::to_string(n) + " exceeds the width limit of " +
                        std::to_string(kMaxVertices));
  }
  rows_.resize(n);
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) {
    throw ValidationError("vertex out of range: (" + std::to_string(u) + "," + std::to_string(v) +
                          ") with n=" + std::to_string(order()));
  }
  if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  rows_[u].insert(v);
  rows_[v].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  rows_[u].erase(v);
  rows_[v].erase(u);
}

void Graph::toggle_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  rows_[u].flip(v);
  rows_[v].flip(u);
}

void Graph::toggle_clique(const VertexSet& s) {
  s.for_each([&](Vertex w) {
    rows_[w] ^= s;
    rows_[w].flip(w);
  });
}

void Graph::local_complement_in_place(Vertex v) {
  if (v >= order()) throw ValidationError("vertex out of range: " + std::to_string(v));
  VertexSet nb = rows_[v];
  toggle_clique(nb);
}

void Graph::pivot_in_place(Vertex u, Vertex v) {
  check_pair(u, v);
  if (!adjacent(u, v)) {
    throw ValidationError("pivot on non-edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  local_complement_in_place(u);
  local_complement_in_place(v);
  local_complement_in_place(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    rows_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total / 2;
}

VertexSet odd_neighborhood(const Graph& g, const VertexSet& d) {
  VertexSet out;
  d.for_each([&](Vertex v) { out ^= g.neighbors(v); });
  return out;
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& k) {
  if (k.empty()) throw ValidationError("common_neighborhood of the empty set");
  VertexSet out = g.vertices();
  k.for_each([&](Vertex v) { out &= g.neighbors(v); });
  return out;
}

VertexSet strict_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out;
  s.for_each([&](Vertex v) { out |= g.neighbors(v); });
  return out - s;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet out = g.neighbors(v);
  out.insert(v);
  return out;
}

Graph local_complement(const Graph& g, Vertex v) {
  Graph out = g;
  out.local_complement_in_place(v);
  return out;
}

Graph pivot(const Graph& g, Vertex u, Vertex v) {
  Graph out = g;
  out.pivot_in_place(u, v);
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> ids = keep.to_vector();
  Graph out(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] >= g.order()) throw ValidationError("induced_subgraph: vertex out of range");
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (g.adjacent(ids[i], ids[j])) {
        out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return out;
}

std::vector<Edge> twins(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v) && g.neighbors(u) == g.neighbors(v)) out.emplace_back(u, v);
    }
  }
  return out;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (auto start = unseen.first()) {
    VertexSet comp;
    comp.insert(*start);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
      next -= comp;
      comp |= next;
      frontier = next;
    }
    unseen -= comp;
    out.push_back(comp);
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace graphlu
