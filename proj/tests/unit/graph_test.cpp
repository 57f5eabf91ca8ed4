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
#include "graphlu/errors.hpp"
#include "graphlu/graph.hpp"
#include "graphlu/graph6.hpp"
#include "oracles.hpp"

using namespace graphlu;
using namespace fixtures;

TEST_CASE("vertex sets") {
  VertexSet s;
  s.insert(3);
  s.insert(300);
  CHECK(s.size() == 2);
  CHECK(s.first() == 3u);
  CHECK(s.last() == 300u);
  CHECK(s.to_string() == "{3,300}");
  CHECK((s - VertexSet::range(10)).to_vector() == std::vector<Vertex>{300});
  VertexSet a, b;
  a.insert(1);
  a.insert(5);
  b.insert(1);
  b.insert(5);
  b.insert(2);
  CHECK(lex_less(b, a));  // {1,2,5} < {1,5}
  a.erase(5);
  CHECK(lex_less(a, b));  // proper prefix
}

TEST_CASE("odd neighbourhood") {
  const Graph p = path(3);
  VertexSet ac;
  ac.insert(0);
  ac.insert(2);
  CHECK(odd_neighborhood(p, ac).empty());
  CHECK(odd_neighborhood(p, VertexSet{}).empty());
  VertexSet d;
  d.insert(D);
  CHECK(odd_neighborhood(six_vertex(), d).to_vector() == std::vector<Vertex>{A, E});
}

TEST_CASE("common neighbourhood") {
  const Graph g = six_vertex();
  VertexSet ef, de;
  ef.insert(E);
  ef.insert(F);
  de.insert(D);
  de.insert(E);
  CHECK(common_neighborhood(g, ef).to_vector() == std::vector<Vertex>{A, B, C});
  CHECK(common_neighborhood(g, de).to_vector() == std::vector<Vertex>{A});
  const Graph iso = Graph::from_edges(3, {{0, 1}});
  VertexSet two;
  two.insert(2);
  CHECK(common_neighborhood(iso, two).empty());
  CHECK_THROWS_AS(common_neighborhood(g, VertexSet{}), ValidationError);
}

TEST_CASE("local complementation") {
  const Graph triangle = complete(3);
  CHECK(local_complement(triangle, 0) == star(3));
  const Graph g = local_complement(six_vertex(), A);
  CHECK_FALSE(g.adjacent(D, E));
  CHECK(g.adjacent(D, F));
  CHECK_FALSE(g.adjacent(E, F));
  CHECK(g.edge_count() == six_vertex().edge_count() - 1);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const auto ng = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 15), 0.4);
    const Graph lg = oracle::to_lib(ng);
    const Vertex v = static_cast<Vertex>(rng() % lg.order());
    CHECK(oracle::from_lib(local_complement(lg, v)) == oracle::lc(ng, static_cast<int>(v)));
    CHECK(local_complement(local_complement(lg, v), v) == lg);
  }
}

TEST_CASE("pivot") {
  CHECK_THROWS_AS(pivot(path(3), 0, 2), ValidationError);
  const Graph p = pivot(path(3), 0, 1);
  CHECK(p.edges() == std::vector<Edge>{{0, 1}, {0, 2}});

  std::mt19937_64 rng(12);
  int checked = 0;
  while (checked < 500) {
    const Graph g = oracle::to_lib(oracle::random_graph(rng, 2 + static_cast<int>(rng() % 12), 0.5));
    const auto edges = g.edges();
    if (edges.empty()) continue;
    const auto [u, v] = edges[rng() % edges.size()];
    const Graph h = pivot(g, u, v);
    CHECK(h == local_complement(local_complement(local_complement(g, u), v), u));
    CHECK(h == pivot(g, v, u));
    CHECK(pivot(h, u, v) == g);
    ++checked;
  }
}

TEST_CASE("twins and components") {
  CHECK(twins(six_vertex()) == std::vector<Edge>{{B, C}});
  CHECK(twins(complete(4)).empty());
  CHECK(twins(Graph(3)).size() == 3);
  const Graph g = Graph::from_edges(5, {{0, 3}, {1, 2}});
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].to_string() == "{0,3}");
  CHECK(comps[1].to_string() == "{1,2}");
  CHECK(comps[2].to_string() == "{4}");
  CHECK_FALSE(is_connected(g));
  VertexSet keep;
  keep.insert(1);
  keep.insert(2);
  keep.insert(4);
  CHECK(induced_subgraph(g, keep).edges() == std::vector<Edge>{{0, 1}});
  VertexSet s;
  s.insert(A);
  CHECK(strict_neighborhood(six_vertex(), s).to_vector() == std::vector<Vertex>{D, E, F});
}

TEST_CASE("graph edits are validated") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 0), ValidationError);
  CHECK_THROWS_AS(g.add_edge(0, 3), ValidationError);
  CHECK_THROWS_AS(Graph(kMaxVertices + 1), ResourceError);
}

TEST_CASE("graph6 round trip against the reference encoder") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    const auto ng = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 30), 0.5);
    const Graph g = oracle::to_lib(ng);
    CHECK(to_graph6(g) == oracle::graph6(ng));
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  // Large orders use the 4-byte size prefix.
  std::vector<Edge> e{{0, 99}, {5, 6}};
  const Graph big = Graph::from_edges(100, e);
  const std::string s = to_graph6(big);
  CHECK(s[0] == '~');
  CHECK(from_graph6(s) == big);
}

TEST_CASE("graph6 known strings") {
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(complete(2)) == "A_");
  CHECK(to_graph6(path(3)) == "Bg");
  CHECK(from_graph6(">>graph6<<Bg") == path(3));
  CHECK_THROWS_AS(from_graph6("Bgg"), ParseError);
  CHECK_THROWS_AS(from_graph6("B"), ParseError);
  CHECK_THROWS_AS(from_graph6("A`"), ParseError);  // nonzero padding
  CHECK_THROWS_AS(from_graph6(""), ParseError);
}

TEST_CASE("isomorphism class enumeration in the test oracle") {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) CHECK(oracle::all_graphs_up_to_isomorphism(n).size() == expected[n - 1]);
}
