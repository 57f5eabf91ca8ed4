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
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graphlu/graph.hpp"
#include "graphlu/vertex_set.hpp"

namespace graphlu {

inline constexpr unsigned kMaxLevel = 30;

// Vertex multiplicities reduced mod 2^level. Vertices past the stored range
// have multiplicity zero.
class VertexMultiset {
 public:
  explicit VertexMultiset(unsigned level = 1);
  static VertexMultiset from_set(const VertexSet& s, unsigned level);

  unsigned level() const { return level_; }
  std::uint64_t modulus() const { return std::uint64_t{1} << level_; }

  std::uint32_t get(Vertex v) const { return v < mult_.size() ? mult_[v] : 0; }
  void set(Vertex v, std::uint64_t value);
  void add(Vertex v, std::uint64_t value);

  VertexSet support() const;
  bool is_zero() const { return support().empty(); }
  // Sum of multiplicities over `s` as an integer (not reduced).
  std::uint64_t sum_over(const VertexSet& s) const;

  // Same residues read at another level: reduced when r < level, taken as
  // representatives in [0, 2^level) when r > level.
  VertexMultiset at_level(unsigned r) const;

  std::string to_string() const;

  friend bool operator==(const VertexMultiset& a, const VertexMultiset& b);

 private:
  unsigned level_;
  std::vector<std::uint32_t> mult_;
};

// S•Λ^K: the multiplicity of S over the common neighbourhood of k.
std::uint64_t s_dot_lambda(const Graph& g, const VertexMultiset& s, const VertexSet& k);

// First K (in DFS order over increasing ids) breaking r-incidence, if any.
std::optional<VertexSet> find_incidence_violation(const Graph& g, const VertexMultiset& s);
bool is_r_incident(const Graph& g, const VertexMultiset& s);
bool is_independent(const Graph& g, const VertexMultiset& s);

// r-local complementation. Validates independence and r-incidence. When
// `z_hint` is given every toggled pair must lie inside it.
Graph apply_rlc(const Graph& g, const VertexMultiset& s, const VertexSet* z_hint = nullptr);
// No precondition checks.
Graph apply_rlc_unchecked(const Graph& g, const VertexMultiset& s);
// Pairs u < v toggled by the r-local complementation, without validation.
std::vector<Edge> rlc_toggles(const Graph& g, const VertexMultiset& s);

VertexMultiset multiset_add(const VertexMultiset& a, const VertexMultiset& b);

struct TwoLcDecomposition {
  VertexSet s2;  // 2-LC over this set
  VertexSet s1;  // then 1-LC over this set
};
TwoLcDecomposition decompose_2lc(const Graph& g, const VertexMultiset& s);

bool is_genuine(const Graph& g, const VertexMultiset& s);
// Level r-1 multiset with the same action, for non-genuine s at level r > 1.
VertexMultiset reduce_nongenuine(const Graph& g, const VertexMultiset& s);

}  // namespace graphlu
