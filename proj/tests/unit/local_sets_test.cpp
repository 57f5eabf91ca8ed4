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

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "graphlu/errors.hpp"
#include "graphlu/local_sets.hpp"
#include "oracles.hpp"

using namespace graphlu;
using namespace fixtures;

namespace {

VertexSet from_mask(std::uint32_t m) {
  VertexSet s;
  for (Vertex v = 0; v < 32; ++v) {
    if ((m >> v) & 1u) s.insert(v);
  }
  return s;
}

std::uint32_t to_mask(const VertexSet& s) {
  std::uint32_t m = 0;
  s.for_each([&](Vertex v) { m |= 1u << v; });
  return m;
}

std::set<std::uint32_t> all_local_sets(const oracle::NaiveGraph& g) {
  std::set<std::uint32_t> out;
  for (std::uint32_t d = 1; d < (1u << g.n); ++d) out.insert(d | oracle::odd_neighbourhood(g, d));
  return out;
}

}  // namespace

TEST_CASE("generators agree with brute force") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 150; ++t) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto ng = oracle::random_graph(rng, n, 0.45);
    const Graph g = oracle::to_lib(ng);
    const std::uint32_t l = static_cast<std::uint32_t>(rng() % ((1u << n) - 1)) + 1;
    std::vector<std::uint32_t> expect;
    for (std::uint32_t d = l;; d = (d - 1) & l) {
      if (d && (d | oracle::odd_neighbourhood(ng, d)) == l) expect.push_back(d);
      if (d == 0) break;
    }
    std::vector<std::uint32_t> got;
    for (const VertexSet& d : generators_of(g, from_mask(l))) got.push_back(to_mask(d));
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
    CHECK(is_local_set(g, from_mask(l)) == !expect.empty());
  }
}

TEST_CASE("minimal local sets agree with the exhaustive lattice") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 150; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto ng = oracle::random_graph(rng, n, 0.4);
    const Graph g = oracle::to_lib(ng);
    const auto minimal = oracle::minimal_local_sets(ng);
    const std::set<std::uint32_t> min_set(minimal.begin(), minimal.end());
    for (std::uint32_t l : all_local_sets(ng)) {
      const bool is_min = min_set.count(l) > 0;
      CHECK(is_minimal_local_set(g, from_mask(l)) == is_min);
      if (is_min) {
        const auto dim = mls_dimension(g, from_mask(l));
        REQUIRE(dim.has_value());
        CHECK((*dim == 1 || *dim == 2));
        CHECK(generators_of(g, from_mask(l)).size() == (std::size_t{1} << *dim) - 1);
      }
    }
  }
}

TEST_CASE("small local set examples") {
  const Graph k2 = complete(2);
  const VertexSet uv = VertexSet::range(2);
  CHECK(generators_of(k2, uv).size() == 3);
  CHECK(is_minimal_local_set(Graph(1), VertexSet::range(1)));
  const Graph two_edges = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(is_local_set(two_edges, VertexSet::range(4)));
  CHECK_FALSE(is_minimal_local_set(two_edges, VertexSet::range(4)));
  VertexSet center;
  center.insert(0);
  const auto gens = generators_of(star(4), VertexSet::range(4));
  CHECK(std::find(gens.begin(), gens.end(), center) != gens.end());
  Graph iso(3);
  VertexSet v2;
  v2.insert(2);
  CHECK(generators_of(iso, v2) == std::vector<VertexSet>{v2});
}

TEST_CASE("covers of small graphs") {
  const MlsCover edge = mls_cover(complete(2));
  REQUIRE(edge.sets.size() == 1);
  CHECK(edge.sets[0].set == VertexSet::range(2));
  CHECK(types_to_string(vertex_types(complete(2), edge)) == "__");

  const MlsCover p3 = mls_cover(path(3));
  CHECK(p3.sets.size() <= 2);
  CHECK(types_to_string(vertex_types(path(3), p3)) == "XZX");

  CHECK(is_cover_of(six_vertex(), mls_cover(six_vertex())));
  CHECK_FALSE(is_cover_of(Graph(2), edge));
  CHECK(mls_dimension_equal(six_vertex(), six_vertex(), mls_cover(six_vertex()).sets[0].set));
}

TEST_CASE("covers are total and deterministic") {
  // Every labelled graph up to five vertices, then random ones up to eight.
  for (int n = 1; n <= 5; ++n) {
    const int m = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      oracle::NaiveGraph ng;
      ng.n = n;
      ng.adj.assign(n, 0);
      int bit = 0;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
          if ((mask >> bit) & 1u) ng.toggle(u, v);
        }
      }
      const Graph g = oracle::to_lib(ng);
      const MlsCover c = mls_cover(g);
      CHECK(c.covered() == VertexSet::range(g.order()));
      CHECK(is_cover_of(g, c));
    }
  }
  std::mt19937_64 rng(43);
  for (int t = 0; t < 400; ++t) {
    const Graph g = oracle::to_lib(oracle::random_graph(rng, 6 + static_cast<int>(rng() % 3), 0.35));
    const MlsCover c = mls_cover(g);
    CHECK(c.covered() == VertexSet::range(g.order()));
    CHECK(cover_to_json(c) == cover_to_json(mls_cover(g)));
  }
}

TEST_CASE("local sets are invariant under local complementation") {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 500; ++t) {
    const auto ng = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 6), 0.4);
    const auto image = oracle::random_lc_walk(rng, ng, 1 + static_cast<int>(rng() % 6));
    CHECK(all_local_sets(ng) == all_local_sets(image));
    const Graph g = oracle::to_lib(ng);
    CHECK(is_cover_of(oracle::to_lib(image), mls_cover(g)));
  }
}

TEST_CASE("type updates under local complementation") {
  // At v: X->X, Y->Z, Z->Y. On N(v): X<->Y, Z->Z. Elsewhere unchanged.
  auto at_v = [](VertexType t) {
    switch (t) {
      case VertexType::Y:
        return VertexType::Z;
      case VertexType::Z:
        return VertexType::Y;
      default:
        return t;
    }
  };
  auto at_nb = [](VertexType t) {
    switch (t) {
      case VertexType::X:
        return VertexType::Y;
      case VertexType::Y:
        return VertexType::X;
      default:
        return t;
    }
  };
  std::mt19937_64 rng(45);
  for (int t = 0; t < 300; ++t) {
    const Graph g = oracle::to_lib(oracle::random_connected(rng, 3 + static_cast<int>(rng() % 6), 0.4));
    const MlsCover cover = mls_cover(g);
    const auto before = vertex_types(g, cover);
    const Vertex v = static_cast<Vertex>(rng() % g.order());
    const auto after = vertex_types(local_complement(g, v), cover);
    for (Vertex w = 0; w < g.order(); ++w) {
      VertexType expect = before[w];
      if (w == v) expect = at_v(before[w]);
      if (g.adjacent(v, w)) expect = at_nb(before[w]);
      CHECK(after[w] == expect);
    }
  }
}

TEST_CASE("cover validation errors") {
  MlsCover bogus;
  bogus.sets.push_back(LocalSetRecord{VertexSet::range(4), {}, 1});
  CHECK_THROWS_AS(vertex_types(Graph::from_edges(4, {{0, 1}, {2, 3}}), bogus), ValidationError);
  CHECK_THROWS_AS(make_record(Graph(2), VertexSet::range(2)), ValidationError);
}
