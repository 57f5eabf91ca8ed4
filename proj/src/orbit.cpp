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

#include "graphlu/orbit.hpp"

#include <deque>

#include "graphlu/errors.hpp"
#include "graphlu/graph6.hpp"

namespace graphlu {

std::optional<std::size_t> OrbitIndex::find(const Graph& g) const {
  auto it = index_.find(to_graph6(g));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<LocalOp> OrbitIndex::path_to(std::size_t i) const {
  std::vector<LocalOp> out;
  while (via_[i]) {
    out.push_back(*via_[i]);
    i = parent_[i];
  }
  return {out.rbegin(), out.rend()};
}

std::size_t OrbitIndex::add_root(const Graph& g) {
  std::string d = to_graph6(g);
  auto [it, inserted] = index_.emplace(d, members_.size());
  if (!inserted) return it->second;
  members_.push_back(g);
  digests_.push_back(std::move(d));
  parent_.push_back(members_.size() - 1);
  via_.push_back(std::nullopt);
  return members_.size() - 1;
}

bool OrbitIndex::add_child(const Graph& g, std::size_t parent, LocalOp op) {
  std::string d = to_graph6(g);
  auto [it, inserted] = index_.emplace(d, members_.size());
  if (!inserted) return false;
  members_.push_back(g);
  digests_.push_back(std::move(d));
  parent_.push_back(parent);
  via_.push_back(std::move(op));
  return true;
}

namespace {

void check_order(const Graph& g, const OrbitOptions& options) {
  if (g.order() > options.max_order) {
    throw ResourceError("orbit search limited to order " + std::to_string(options.max_order) +
                        ", got " + std::to_string(g.order()));
  }
}

void check_budget(const OrbitIndex& idx, const OrbitOptions& options) {
  if (idx.size() > options.node_budget) {
    throw ResourceError("orbit exceeded the node budget of " + std::to_string(options.node_budget));
  }
}

}  // namespace

OrbitIndex lc_orbit(const Graph& g, const std::optional<VertexSet>& allowed, const OrbitOptions& options) {
  check_order(g, options);
  const VertexSet moves = allowed ? (*allowed & g.vertices()) : g.vertices();
  OrbitIndex idx;
  idx.add_root(g);
  for (std::size_t head = 0; head < idx.size(); ++head) {
    const Graph current = idx.member(head);
    moves.for_each([&](Vertex v) {
      if (current.degree(v) < 2) return;
      idx.add_child(local_complement(current, v), head, LcOp{v});
    });
    check_budget(idx, options);
  }
  return idx;
}

std::vector<VertexMultiset> nontrivial_rlc_moves(const Graph& g, unsigned r, bool multisets) {
  const std::size_t n = g.order();
  std::vector<VertexMultiset> out;
  // Vertices of degree < 2 never contribute to a toggle.
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) >= 2) candidates.push_back(v);
  }
  const std::uint32_t max_mult = multisets ? (std::uint32_t{1} << r) - 1 : 1;
  VertexMultiset s(r);
  VertexSet chosen;
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (!chosen.empty() && is_r_incident(g, s) && !rlc_toggles(g, s).empty()) out.push_back(s);
    for (std::size_t i = start; i < candidates.size(); ++i) {
      const Vertex v = candidates[i];
      if (g.neighbors(v).intersects(chosen)) continue;
      chosen.insert(v);
      for (std::uint32_t m = 1; m <= max_mult; ++m) {
        s.set(v, m);
        self(self, i + 1);
      }
      s.set(v, 0);
      chosen.erase(v);
    }
  };
  dfs(dfs, 0);
  return out;
}

OrbitIndex lcr_orbit_small(const Graph& g, unsigned r, const LcrOrbitOptions& options) {
  if (r < 1) throw ValidationError("level must be at least 1");
  if (r == 1) return lc_orbit(g, std::nullopt, options.base);
  check_order(g, options.base);
  OrbitIndex idx;
  idx.add_root(g);
  for (std::size_t head = 0; head < idx.size(); ++head) {
    const Graph current = idx.member(head);
    for (Vertex v = 0; v < current.order(); ++v) {
      if (current.degree(v) < 2) continue;
      idx.add_child(local_complement(current, v), head, LcOp{v});
    }
    for (auto& s : nontrivial_rlc_moves(current, r, options.multiset_moves)) {
      idx.add_child(apply_rlc_unchecked(current, s), head, RlcOp{s});
    }
    check_budget(idx, options.base);
  }
  return idx;
}

}  // namespace graphlu
