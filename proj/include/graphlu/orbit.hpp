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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphlu/graph.hpp"
#include "graphlu/witness.hpp"

namespace graphlu {

struct OrbitOptions {
  std::size_t max_order = 12;
  std::size_t node_budget = 2'000'000;
};

// Breadth-first closure of a labelled graph under a move set. Members are
// keyed by their graph6 string; member 0 is the seed.
class OrbitIndex {
 public:
  std::size_t size() const { return members_.size(); }
  const Graph& member(std::size_t i) const { return members_[i]; }
  const std::string& digest(std::size_t i) const { return digests_[i]; }
  std::optional<std::size_t> find(const Graph& g) const;
  bool contains(const Graph& g) const { return find(g).has_value(); }
  // Moves from the seed to member i.
  std::vector<LocalOp> path_to(std::size_t i) const;

  // Builder interface.
  std::size_t add_root(const Graph& g);
  // Returns true when `g` is new.
  bool add_child(const Graph& g, std::size_t parent, LocalOp op);

 private:
  std::vector<Graph> members_;
  std::vector<std::string> digests_;
  std::vector<std::size_t> parent_;
  std::vector<std::optional<LocalOp>> via_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Closure under ⋆v for v in `allowed` (all vertices by default).
OrbitIndex lc_orbit(const Graph& g, const std::optional<VertexSet>& allowed = std::nullopt,
                    const OrbitOptions& options = {});

struct LcrOrbitOptions {
  OrbitOptions base{10, 2'000'000};
  // Moves over r-incident independent multisets instead of sets (r = 2).
  bool multiset_moves = false;
};

// Closure under ⋆v and ⋆^r over r-incident independent sets (multisets with
// multiplicities in [1, 2^r) when requested). Level 1 reduces to lc_orbit.
OrbitIndex lcr_orbit_small(const Graph& g, unsigned r, const LcrOrbitOptions& options = {});

// Independent sets (or multisets) S with supp(S) nonempty that are r-incident
// in g and act nontrivially on it.
std::vector<VertexMultiset> nontrivial_rlc_moves(const Graph& g, unsigned r, bool multisets);

}  // namespace graphlu
