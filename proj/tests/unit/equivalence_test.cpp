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

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "graphlu/equivalence.hpp"
#include "graphlu/errors.hpp"
#include "graphlu/graph6.hpp"
#include "graphlu/orbit.hpp"
#include "oracles.hpp"

using namespace graphlu;
using namespace fixtures;

namespace {

VertexSet of_type(const std::vector<VertexType>& types, VertexType t) {
  VertexSet s;
  for (Vertex v = 0; v < types.size(); ++v) {
    if (types[v] == t) s.insert(v);
  }
  return s;
}

// Tree on n vertices from a random Prufer-like parent array.
Graph random_tree(std::mt19937_64& rng, std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(static_cast<Vertex>(rng() % v), v);
  return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("level bounds") {
  CHECK(max_useful_level(1) == 1);
  CHECK(max_useful_level(15) == 1);
  CHECK(max_useful_level(16) == 2);
  CHECK(max_useful_level(19) == 2);
  CHECK(max_useful_level(27) == 2);
  CHECK(max_useful_level(31) == 2);
  CHECK(max_useful_level(32) == 3);
  CHECK(min_genuine_support(1) == 0);
  CHECK(min_genuine_support(2) == 11);
  CHECK(min_genuine_support(3) == 26);
  CHECK(order_bound(16, 2));
  CHECK_FALSE(order_bound(15, 2));
}

TEST_CASE("six-vertex pair under one 2-local complementation") {
  const Graph g1 = six_vertex();
  const Graph g2 = apply_rlc(g1, six_vertex_multiset());
  CHECK(g2.adjacent(D, F));
  CHECK_FALSE(g2.adjacent(D, E));
  CHECK(to_graph6(g1) == "EC~g");
  CHECK(to_graph6(g2) == "ECzw");
  CHECK(rlc_toggles(g1, six_vertex_multiset()) == std::vector<Edge>{{D, E}, {D, F}});

  const Decision d2 = decide_lcr(g1, g2, 2);
  CHECK(d2.equivalent);
  REQUIRE(d2.witness.has_value());
  CHECK(verify_witness(g1, *d2.witness, g2));
  CHECK(count_rlc(d2.witness->ops) >= 1);

  // Six vertices are below the order where a genuine 2-local
  // complementation exists, so an LC sequence also connects the pair.
  const Decision d1 = decide_lcr(g1, g2, 1);
  CHECK(d1.equivalent);
  REQUIRE(d1.witness.has_value());
  for (const LocalOp& op : d1.witness->ops) {
    if (const auto* rlc = std::get_if<RlcOp>(&op)) CHECK(rlc->s.level() == 1);
  }
  CHECK(verify_witness(g1, *d1.witness, g2));
  CHECK_FALSE(is_genuine(g1, six_vertex_multiset()));
}

TEST_CASE("six-vertex pair: the omega basis realises the d-e, d-f toggle") {
  const Graph g1 = six_vertex();
  const Graph g2 = apply_rlc(g1, six_vertex_multiset());
  const auto out = standardize_pair(g1, g2);
  REQUIRE(std::holds_alternative<StandardFormResult>(out));
  const auto& res = std::get<StandardFormResult>(out);
  const VertexSet vx = of_type(res.types1, VertexType::X);
  const VertexSet vz = of_type(res.types1, VertexType::Z);
  const OmegaBasis basis = omega_basis(res.g1, 2, vx, vz);
  REQUIRE_FALSE(basis.omegas.empty());
  for (std::size_t i = 0; i < basis.omegas.size(); ++i) {
    CHECK(is_r_incident(res.g1, basis.preimages[i]));
    CHECK(basis.preimages[i].support().is_subset_of(vx));
    CHECK(omega_of(res.g1, basis.preimages[i], basis) == basis.omegas[i]);
  }
  // The difference between the standardized graphs restricted to Z pairs
  // lies in the span of the basis.
  BitVec diff(basis.z_pairs.size());
  for (std::size_t i = 0; i < basis.z_pairs.size(); ++i) {
    const auto [u, v] = basis.z_pairs[i];
    diff.set(i, res.g1.adjacent(u, v) != res.g2.adjacent(u, v));
  }
  F2Echelon span(basis.z_pairs.size());
  for (const BitVec& o : basis.omegas) span.insert(o);
  CHECK(span.in_span(diff));

  const SharpGraph sharp = build_sharp(res.g1, vx, vz, basis);
  CHECK(sharp.base_order == g1.order());
  for (std::size_t i = 0; i < sharp.new_vertices.size(); ++i) {
    const Vertex w = static_cast<Vertex>(sharp.base_order + i);
    CHECK(sharp.graph.degree(w) == 2);
    CHECK(sharp.graph.adjacent(w, sharp.new_vertices[i].pair.first));
    CHECK(sharp.graph.adjacent(w, sharp.new_vertices[i].pair.second));
  }
  vx.for_each([&](Vertex x) { CHECK(sharp.graph.degree(x) == 0); });
  CHECK(sharp.groups.size() == basis.omegas.size());
}

TEST_CASE("LC-equivalent pairs are LU-equivalent at every level") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 150; ++t) {
    const auto ng = oracle::random_connected(rng, 2 + static_cast<int>(rng() % 9), 0.4);
    const Graph g1 = oracle::to_lib(ng);
    const Graph g2 = oracle::to_lib(oracle::random_lc_walk(rng, ng, 6));
    for (unsigned r : {1u, 2u}) {
      const Decision d = decide_lcr(g1, g2, r);
      CHECK(d.equivalent);
      REQUIRE(d.witness.has_value());
      CHECK(verify_witness(g1, *d.witness, g2));
    }
  }
}

TEST_CASE("level 1 agrees with LC") {
  std::mt19937_64 rng(72);
  for (int t = 0; t < 300; ++t) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto ng = oracle::random_connected(rng, n, 0.5);
    const auto other = oracle::random_connected(rng, n, 0.5);
    const Graph g1 = oracle::to_lib(ng), g2 = oracle::to_lib(other);
    CHECK(decide_lcr(g1, g2, 1).equivalent == (oracle::lc_orbit(ng).count(other) > 0));
  }
}

TEST_CASE("trees with different minimal local sets are rejected") {
  std::mt19937_64 rng(73);
  int tried = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 4 + rng() % 8;
    const Graph g1 = random_tree(rng, n), g2 = random_tree(rng, n);
    if (oracle::minimal_local_sets(oracle::from_lib(g1)) == oracle::minimal_local_sets(oracle::from_lib(g2))) continue;
    ++tried;
    const Decision d = decide_lu(g1, g2);
    CHECK_FALSE(d.equivalent);
    CHECK_FALSE(d.witness.has_value());
  }
  CHECK(tried > 100);
}

TEST_CASE("witness verification rejects corrupted witnesses") {
  const Graph g1 = six_vertex();
  const Graph g2 = apply_rlc(g1, six_vertex_multiset());
  const Decision d = decide_lcr(g1, g2, 2);
  REQUIRE(d.witness.has_value());
  Witness w = *d.witness;
  CHECK(verify_witness(g1, w, g2));

  Witness extra = w;
  extra.ops.push_back(LcOp{A});
  CHECK_FALSE(verify_witness(g1, extra, g2));

  Witness bad_digest = w;
  bad_digest.source = to_graph6(g2);
  CHECK_FALSE(verify_witness(g1, bad_digest, g2));

  Witness bad_rlc = w;
  VertexMultiset s(2);
  s.set(A, 1);
  bad_rlc.ops.insert(bad_rlc.ops.begin(), RlcOp{s});
  CHECK_FALSE(verify_witness(g1, bad_rlc, g2));

  Witness bad_pivot;
  bad_pivot.ops.push_back(PivotOp{A, B});
  CHECK_FALSE(verify_witness(g1, bad_pivot, g1));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(decide_lcr(path(3), path(4), 1), ValidationError);
  CHECK_THROWS_AS(decide_lcr(path(3), path(3), 0), ValidationError);
  const Decision trivial = decide_lcr(Graph(1), Graph(1), 2);
  CHECK(trivial.equivalent);
}

TEST_CASE("omega basis on the six-vertex graph with X = {a, b, c}") {
  const Graph g = six_vertex();
  const VertexSet vx{A, B, C}, vz{D, E, F};
  const OmegaBasis basis = omega_basis(g, 2, vx, vz);
  CHECK(basis.z_pairs == std::vector<Edge>{{D, E}, {D, F}, {E, F}});
  BitVec target(3);
  target.set(*basis.pair_index(D, E), true);
  target.set(*basis.pair_index(D, F), true);
  F2Echelon span(3);
  for (const BitVec& o : basis.omegas) span.insert(o);
  CHECK(span.in_span(target));
  CHECK(omega_of(g, six_vertex_multiset(), basis) == target);
}

TEST_CASE("level-2 witnesses use at most one r-local complementation") {
  std::mt19937_64 rng(74);
  for (int t = 0; t < 40; ++t) {
    const Graph g = oracle::to_lib(oracle::random_connected(rng, 4 + static_cast<int>(rng() % 4), 0.4));
    const OrbitIndex orbit = lcr_orbit_small(g, 2);
    const Graph& h = orbit.member(rng() % orbit.size());
    const Decision d = decide_lcr(g, h, 2);
    REQUIRE(d.witness.has_value());
    CHECK(count_rlc(d.witness->ops) <= 1);
  }
}
