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
#include <vector>

#include "graphlu/bouchet.hpp"
#include "graphlu/f2.hpp"
#include "graphlu/graph.hpp"
#include "graphlu/multiset.hpp"
#include "graphlu/standard_form.hpp"
#include "graphlu/witness.hpp"

namespace graphlu {

// Edge-toggle patterns reachable by one r-local complementation over the X
// vertices, with a multiset realising each basis vector.
struct OmegaBasis {
  unsigned level = 1;
  VertexSet vx, vz;
  // Coordinates: unordered pairs of vz, lexicographic on (min, max).
  std::vector<Edge> z_pairs;
  std::vector<BitVec> omegas;
  std::vector<VertexMultiset> preimages;
  // Howell generators before basis extraction.
  std::vector<VertexMultiset> generators;

  std::optional<std::size_t> pair_index(Vertex u, Vertex v) const;
};

// Toggle pattern of s on g restricted to the pairs of `basis`.
BitVec omega_of(const Graph& g, const VertexMultiset& s, const OmegaBasis& basis);

// Generators of the r-incident multisets supported on the independent set vx,
// with the incidence conditions taken over K ⊆ k_domain. With k_domain =
// V \ vx these are all r-incident multisets supported on vx.
std::vector<VertexMultiset> incidence_generators(const Graph& g, unsigned r, const VertexSet& vx,
                                                const VertexSet& k_domain);

OmegaBasis omega_basis(const Graph& g1, unsigned r, const VertexSet& vx, const VertexSet& vz);

// G with the edges at V_X removed (the vertices stay, isolated, so ids are
// unchanged) plus one degree-2 vertex per (basis vector, toggled pair),
// appended in (basis index, pair order).
struct SharpGraph {
  struct NewVertex {
    std::size_t omega;
    Edge pair;
  };
  Graph graph;
  std::size_t base_order = 0;
  std::vector<NewVertex> new_vertices;   // vertex id = base_order + index
  std::vector<std::vector<Vertex>> groups;  // per basis vector
};

SharpGraph build_sharp(const Graph& g, const VertexSet& vx, const VertexSet& vz, const OmegaBasis& basis);
// b = 0 on V_Z and V_X, c = 0 on new vertices, b constant on each group.
ConstraintSet sharp_constraints(const SharpGraph& sharp, const VertexSet& vx, const VertexSet& vz);

struct Decision {
  bool equivalent = false;
  std::optional<Witness> witness;
  unsigned level = 1;
  std::string stage;   // rejecting stage, empty on success
  std::string reason;
};

struct DecideOptions {
  StandardFormOptions standard_form;
  BouchetOptions bouchet;
};

Decision decide_lcr(const Graph& g1, const Graph& g2, unsigned r, const DecideOptions& options = {});
Decision decide_lu(const Graph& g1, const Graph& g2, const DecideOptions& options = {});
Decision decide_lc_pair(const Graph& g1, const Graph& g2, const ConstraintSet& extra = ConstraintSet{},
                        const BouchetOptions& options = {});

// Smallest r >= 1 with n <= 2^(r+3) - 1.
unsigned max_useful_level(std::size_t n);

// Replays every op with full validation; false on any violation or when the
// result differs from g2 (or the recorded digests disagree).
bool verify_witness(const Graph& g1, const Witness& w, const Graph& g2);

// |supp(S)| >= 2^(r+2) - r - 3 for genuine S at r > 1; vacuous at r = 1.
bool genuine_support_bound(const VertexMultiset& s);
// |V \ supp(S)| >= r + 3.
bool complement_bound(const Graph& g, const VertexMultiset& s);
// n >= 2^(r+2).
bool order_bound(std::size_t n, unsigned r);
// 2^(r+2) - r - 3, or 0 at r = 1 where no bound holds.
std::size_t min_genuine_support(unsigned r);

}  // namespace graphlu
