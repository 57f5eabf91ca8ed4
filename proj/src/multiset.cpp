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

#include "graphlu/multiset.hpp"

#include <map>
#include <string>

#include "graphlu/errors.hpp"

namespace graphlu {

namespace {

void check_level(unsigned level) {
  if (level < 1 || level > kMaxLevel) {
    throw ValidationError("level must lie in [1, " + std::to_string(kMaxLevel) +
                          "], got " + std::to_string(level));
  }
}

void check_fits(const Graph& g, const VertexMultiset& s) {
  auto top = s.support().last();
  if (top && *top >= g.order()) {
    throw ValidationError("multiset support vertex " + std::to_string(*top) +
                          " outside graph of order " + std::to_string(g.order()));
  }
}

}  // namespace

VertexMultiset::VertexMultiset(unsigned level) : level_(level) { check_level(level); }

VertexMultiset VertexMultiset::from_set(const VertexSet& s, unsigned level) {
  VertexMultiset out(level);
  s.for_each([&](Vertex v) { out.set(v, 1); });
  return out;
}

void VertexMultiset::set(Vertex v, std::uint64_t value) {
  if (v >= kMaxVertices) throw ResourceError("multiset vertex beyond width limit");
  if (v >= mult_.size()) mult_.resize(v + 1, 0);
  mult_[v] = static_cast<std::uint32_t>(value & (modulus() - 1));
}

void VertexMultiset::add(Vertex v, std::uint64_t value) { set(v, get(v) + value); }

VertexSet VertexMultiset::support() const {
  VertexSet out;
  for (Vertex v = 0; v < mult_.size(); ++v) {
    if (mult_[v]) out.insert(v);
  }
  return out;
}

std::uint64_t VertexMultiset::sum_over(const VertexSet& s) const {
  std::uint64_t total = 0;
  s.for_each([&](Vertex v) { total += get(v); });
  return total;
}

VertexMultiset VertexMultiset::at_level(unsigned r) const {
  VertexMultiset out(r);
  for (Vertex v = 0; v < mult_.size(); ++v) {
    if (mult_[v]) out.set(v, mult_[v]);
  }
  return out;
}

std::string VertexMultiset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Vertex v = 0; v < mult_.size(); ++v) {
    if (!mult_[v]) continue;
    if (!first) out += ",";
    first = false;
    out += std::to_string(v) + ":" + std::to_string(mult_[v]);
  }
  return out + "}@" + std::to_string(level_);
}

bool operator==(const VertexMultiset& a, const VertexMultiset& b) {
  if (a.level_ != b.level_) return false;
  std::size_t n = std::max(a.mult_.size(), b.mult_.size());
  for (Vertex v = 0; v < n; ++v) {
    if (a.get(v) != b.get(v)) return false;
  }
  return true;
}

std::uint64_t s_dot_lambda(const Graph& g, const VertexMultiset& s, const VertexSet& k) {
  return s.sum_over(common_neighborhood(g, k));
}

std::optional<VertexSet> find_incidence_violation(const Graph& g, const VertexMultiset& s) {
  check_fits(g, s);
  const unsigned r = s.level();
  if (r == 1) return std::nullopt;
  const VertexSet supp = s.support();
  const std::vector<Vertex> outside = (g.vertices() - supp).to_vector();
  std::optional<VertexSet> bad;
  VertexSet current;
  // DFS over K in increasing id order; `reach` = supp ∩ Λ^K. Once it is empty
  // no superset can contribute.
  auto dfs = [&](auto&& self, std::size_t start, const VertexSet& reach) -> void {
    const std::size_t size = current.size();
    if (size >= 2) {
      const unsigned k = static_cast<unsigned>(size - 2);
      const unsigned exponent = r - k - (k == 0 ? 1 : 0);
      const std::uint64_t mask = (std::uint64_t{1} << exponent) - 1;
      if (s.sum_over(reach) & mask) {
        bad = current;
        return;
      }
    }
    if (size >= r + 1) return;
    for (std::size_t i = start; i < outside.size() && !bad; ++i) {
      VertexSet next = reach & g.neighbors(outside[i]);
      if (next.empty()) continue;
      current.insert(outside[i]);
      self(self, i + 1, next);
      current.erase(outside[i]);
    }
  };
  dfs(dfs, 0, supp);
  return bad;
}

bool is_r_incident(const Graph& g, const VertexMultiset& s) {
  return !find_incidence_violation(g, s).has_value();
}

bool is_independent(const Graph& g, const VertexMultiset& s) {
  check_fits(g, s);
  return is_independent_set(g, s.support());
}

std::vector<Edge> rlc_toggles(const Graph& g, const VertexMultiset& s) {
  const std::size_t n = g.order();
  const std::uint64_t mask = s.modulus() - 1;
  const std::uint64_t half = s.modulus() >> 1;
  std::vector<std::uint64_t> pair_sum(n * n, 0);
  s.support().for_each([&](Vertex w) {
    const std::uint64_t m = s.get(w);
    std::vector<Vertex> nb = g.neighbors(w).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) pair_sum[nb[i] * n + nb[j]] += m;
    }
  });
  std::vector<Edge> out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if ((pair_sum[u * n + v] & mask) == half) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph apply_rlc_unchecked(const Graph& g, const VertexMultiset& s) {
  Graph out = g;
  for (auto [u, v] : rlc_toggles(g, s)) out.toggle_edge(u, v);
  return out;
}

Graph apply_rlc(const Graph& g, const VertexMultiset& s, const VertexSet* z_hint) {
  check_fits(g, s);
  const VertexSet supp = s.support();
  for (Vertex u : supp.to_vector()) {
    VertexSet clash = g.neighbors(u) & supp;
    if (auto v = clash.first()) {
      throw ValidationError("multiset not independent: edge (" + std::to_string(u) + "," +
                            std::to_string(*v) + ") inside the support");
    }
  }
  if (auto bad = find_incidence_violation(g, s)) {
    throw ValidationError("multiset " + s.to_string() + " is not " + std::to_string(s.level()) +
                          "-incident: violated at K=" + bad->to_string());
  }
  Graph out = g;
  for (auto [u, v] : rlc_toggles(g, s)) {
    if (supp.contains(u) || supp.contains(v)) {
      throw InternalError("r-local complementation toggled an edge at the support");
    }
    if (z_hint && !(z_hint->contains(u) && z_hint->contains(v))) {
      throw InternalError("r-local complementation toggled (" + std::to_string(u) + "," +
                          std::to_string(v) + ") outside the Z vertices");
    }
    out.toggle_edge(u, v);
  }
  return out;
}

VertexMultiset multiset_add(const VertexMultiset& a, const VertexMultiset& b) {
  if (a.level() != b.level()) {
    throw ValidationError("multiset_add: level mismatch " + std::to_string(a.level()) + " vs " +
                          std::to_string(b.level()));
  }
  VertexMultiset out = a;
  b.support().for_each([&](Vertex v) { out.add(v, b.get(v)); });
  return out;
}

TwoLcDecomposition decompose_2lc(const Graph& g, const VertexMultiset& s) {
  if (s.level() != 2) throw ValidationError("decompose_2lc expects a level-2 multiset");
  if (!is_independent(g, s)) throw ValidationError("decompose_2lc: support not independent");
  if (auto bad = find_incidence_violation(g, s)) {
    throw ValidationError("decompose_2lc: not 2-incident at K=" + bad->to_string());
  }
  TwoLcDecomposition out;
  s.support().for_each([&](Vertex v) {
    const std::uint32_t m = s.get(v);
    if (m >= 2) out.s1.insert(v);
    // Adding 2 to multiplicities in s1 leaves exactly the odd ones.
    if (m & 1) out.s2.insert(v);
  });
  return out;
}

namespace {

// Support vertices of degree at least 2 grouped by neighbourhood; the map key
// is the neighbourhood and the value the members in increasing id order.
std::map<std::vector<Vertex>, std::vector<Vertex>> neighbourhood_classes(const Graph& g,
                                                                          const VertexMultiset& s) {
  std::map<std::vector<Vertex>, std::vector<Vertex>> classes;
  s.support().for_each([&](Vertex u) {
    if (g.degree(u) >= 2) classes[g.neighbors(u).to_vector()].push_back(u);
  });
  return classes;
}

void check_valid(const Graph& g, const VertexMultiset& s, const char* what) {
  if (!is_independent(g, s)) throw ValidationError(std::string(what) + ": support not independent");
  if (auto bad = find_incidence_violation(g, s)) {
    throw ValidationError(std::string(what) + ": not r-incident at K=" + bad->to_string());
  }
}

}  // namespace

bool is_genuine(const Graph& g, const VertexMultiset& s) {
  check_valid(g, s, "is_genuine");
  for (const auto& [nb, members] : neighbourhood_classes(g, s)) {
    std::uint64_t total = 0;
    for (Vertex u : members) total += s.get(u);
    if (total & 1) return true;
  }
  return false;
}

VertexMultiset reduce_nongenuine(const Graph& g, const VertexMultiset& s) {
  if (s.level() < 2) throw ValidationError("reduce_nongenuine needs level > 1");
  check_valid(g, s, "reduce_nongenuine");
  VertexMultiset out(s.level() - 1);
  for (const auto& [nb, members] : neighbourhood_classes(g, s)) {
    std::uint64_t total = 0;
    for (Vertex u : members) total += s.get(u);
    if (total & 1) throw ValidationError("reduce_nongenuine: multiset is genuine");
    out.set(members.front(), total / 2);
  }
  return out;
}

}  // namespace graphlu
