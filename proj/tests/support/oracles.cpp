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

#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <stdexcept>

#include "graphlu/equivalence.hpp"

namespace oracle {

NaiveGraph from_lib(const graphlu::Graph& g) {
  NaiveGraph out;
  out.n = static_cast<int>(g.order());
  out.adj.assign(out.n, 0);
  for (auto [u, v] : g.edges()) out.toggle(static_cast<int>(u), static_cast<int>(v));
  return out;
}

graphlu::Graph to_lib(const NaiveGraph& g) {
  std::vector<graphlu::Edge> edges;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (g.edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return graphlu::Graph::from_edges(g.n, edges);
}

NaiveGraph lc(const NaiveGraph& g, int v) {
  NaiveGraph out = g;
  for (int a = 0; a < g.n; ++a) {
    for (int b = a + 1; b < g.n; ++b) {
      if (g.edge(v, a) && g.edge(v, b)) out.toggle(a, b);
    }
  }
  return out;
}

bool connected(const NaiveGraph& g) {
  if (g.n == 0) return true;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int u = 0; u < g.n; ++u) {
      if ((frontier >> u) & 1u) next |= g.adj[u];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (g.n == 32 ? ~0u : (1u << g.n) - 1);
}

std::uint64_t dot_lambda(const NaiveGraph& g, const Mult& s, std::uint32_t kmask) {
  std::uint64_t total = 0;
  for (int w = 0; w < g.n; ++w) {
    if ((g.adj[w] & kmask) == kmask) total += s[w];
  }
  return total;
}

bool independent_support(const NaiveGraph& g, const Mult& s) {
  for (int u = 0; u < g.n; ++u) {
    for (int v = 0; v < g.n; ++v) {
      if (s[u] && s[v] && g.edge(u, v)) return false;
    }
  }
  return true;
}

bool incident(const NaiveGraph& g, const Mult& s, unsigned r) {
  std::uint32_t outside = 0;
  for (int v = 0; v < g.n; ++v) {
    if (s[v] % (1u << r) == 0) outside |= 1u << v;
  }
  // Subsets K of the outside vertices with 2 <= |K| <= r + 1, built one
  // vertex at a time in increasing order.
  std::vector<int> out_list;
  for (int v = 0; v < g.n; ++v) {
    if ((outside >> v) & 1u) out_list.push_back(v);
  }
  const int max_size = static_cast<int>(r) + 1;
  bool ok = true;
  auto rec = [&](auto&& self, std::size_t from, std::uint32_t k, int size) -> void {
    if (!ok) return;
    if (size >= 2) {
      const int kk = size - 2;
      const int exponent = static_cast<int>(r) - kk - (kk == 0 ? 1 : 0);
      if (exponent > 0 && dot_lambda(g, s, k) % (std::uint64_t{1} << exponent) != 0) {
        ok = false;
        return;
      }
    }
    if (size == max_size) return;
    for (std::size_t i = from; i < out_list.size(); ++i) self(self, i + 1, k | (1u << out_list[i]), size + 1);
  };
  rec(rec, 0, 0, 0);
  return ok;
}

NaiveGraph rlc(const NaiveGraph& g, const Mult& s, unsigned r) {
  NaiveGraph out = g;
  const std::uint64_t mod = std::uint64_t{1} << r;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (s[u] % mod || s[v] % mod) continue;
      if (dot_lambda(g, s, (1u << u) | (1u << v)) % mod == mod / 2) out.toggle(u, v);
    }
  }
  return out;
}

std::string graph6(const NaiveGraph& g) {
  if (g.n > 62) throw std::logic_error("oracle graph6 handles n <= 62");
  std::string out(1, static_cast<char>(63 + g.n));
  int acc = 0, bits = 0;
  for (int v = 1; v < g.n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.edge(u, v) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(63 + acc);
        acc = bits = 0;
      }
    }
  }
  if (bits) out += static_cast<char>(63 + (acc << (6 - bits)));
  return out;
}

std::uint32_t odd_neighbourhood(const NaiveGraph& g, std::uint32_t d) {
  std::uint32_t out = 0;
  for (int v = 0; v < g.n; ++v) {
    if ((d >> v) & 1u) out ^= g.adj[v];
  }
  return out;
}

std::vector<std::uint32_t> minimal_local_sets(const NaiveGraph& g) {
  if (g.n > 20) throw std::logic_error("oracle local sets handle n <= 20");
  std::set<std::uint32_t> local;
  for (std::uint32_t d = 1; d < (1u << g.n); ++d) local.insert(d | odd_neighbourhood(g, d));
  std::vector<std::uint32_t> out;
  for (std::uint32_t l : local) {
    bool minimal = true;
    for (std::uint32_t m : local) {
      if (m != l && (m & l) == m) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(l);
  }
  return out;
}

std::set<NaiveGraph> lc_orbit(const NaiveGraph& g, std::uint32_t allowed) {
  std::set<NaiveGraph> seen{g};
  std::deque<NaiveGraph> queue{g};
  while (!queue.empty()) {
    NaiveGraph cur = queue.front();
    queue.pop_front();
    for (int v = 0; v < g.n; ++v) {
      if (!((allowed >> v) & 1u)) continue;
      NaiveGraph next = lc(cur, v);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

NaiveGraph random_graph(std::mt19937_64& rng, int n, double p) {
  NaiveGraph g;
  g.n = n;
  g.adj.assign(n, 0);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.toggle(u, v);
    }
  }
  return g;
}

NaiveGraph random_connected(std::mt19937_64& rng, int n, double p) {
  for (;;) {
    NaiveGraph g = random_graph(rng, n, p);
    if (connected(g)) return g;
  }
}

NaiveGraph random_lc_walk(std::mt19937_64& rng, const NaiveGraph& g, int steps) {
  std::uniform_int_distribution<int> pick(0, g.n - 1);
  NaiveGraph out = g;
  for (int i = 0; i < steps; ++i) out = lc(out, pick(rng));
  return out;
}

std::uint32_t random_independent(std::mt19937_64& rng, const NaiveGraph& g, double p) {
  std::vector<int> order(g.n);
  for (int i = 0; i < g.n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(p);
  std::uint32_t s = 0;
  for (int v : order) {
    if ((g.adj[v] & s) == 0 && coin(rng)) s |= 1u << v;
  }
  return s;
}

graphlu::VertexMultiset to_lib(const Mult& s, unsigned r) {
  graphlu::VertexMultiset out(r);
  for (std::size_t v = 0; v < s.size(); ++v) out.set(static_cast<graphlu::Vertex>(v), s[v]);
  return out;
}

Mult from_lib(const graphlu::VertexMultiset& s, int n) {
  Mult out(n, 0);
  for (int v = 0; v < n; ++v) out[v] = s.get(static_cast<graphlu::Vertex>(v));
  return out;
}

IncidenceSampler::IncidenceSampler(const NaiveGraph& g, std::uint32_t support, unsigned r) : g_(g), r_(r) {
  graphlu::VertexSet vx, rest;
  for (int v = 0; v < g.n; ++v) ((support >> v) & 1u ? vx : rest).insert(static_cast<graphlu::Vertex>(v));
  for (const auto& gen : graphlu::incidence_generators(to_lib(g), r, vx, rest)) gens_.push_back(from_lib(gen, g.n));
}

Mult IncidenceSampler::operator()(std::mt19937_64& rng) const {
  Mult out(g_.n, 0);
  std::uniform_int_distribution<std::uint32_t> coeff(0, (1u << r_) - 1);
  for (const Mult& gen : gens_) {
    const std::uint32_t c = coeff(rng);
    for (int v = 0; v < g_.n; ++v) out[v] = (out[v] + c * gen[v]) % (1u << r_);
  }
  if (!incident(g_, out, r_)) throw std::logic_error("incidence generator produced a non-incident multiset");
  return out;
}

Mult random_incident(std::mt19937_64& rng, const NaiveGraph& g, std::uint32_t support, unsigned r) {
  return IncidenceSampler(g, support, r)(rng);
}

namespace {

std::uint64_t graph_code(const NaiveGraph& g, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  int bit = 0;
  for (int v = 1; v < g.n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (g.edge(perm[u], perm[v])) code |= std::uint64_t{1} << bit;
    }
  }
  return code;
}

// Least code over the relabellings that list vertices by increasing
// (degree, sorted neighbour degrees). Isomorphic graphs share this set of
// relabellings, so the least code is a complete invariant.
std::uint64_t canonical_code(const NaiveGraph& g) {
  std::vector<std::vector<int>> key(g.n);
  for (int v = 0; v < g.n; ++v) {
    key[v].push_back(std::popcount(g.adj[v]));
    std::vector<int> nb;
    for (int w = 0; w < g.n; ++w) {
      if (g.edge(v, w)) nb.push_back(std::popcount(g.adj[w]));
    }
    std::sort(nb.begin(), nb.end());
    key[v].insert(key[v].end(), nb.begin(), nb.end());
  }
  std::vector<int> order(g.n);
  for (int v = 0; v < g.n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < g.n;) {
    int j = i;
    while (j < g.n && key[order[j]] == key[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      best = std::min(best, graph_code(g, order));
      return;
    }
    auto first = order.begin() + blocks[b].first, last = order.begin() + blocks[b].second;
    std::sort(first, last);
    do {
      self(self, b + 1);
    } while (std::next_permutation(first, last));
  };
  rec(rec, 0);
  return best;
}

}  // namespace

std::vector<NaiveGraph> all_graphs_up_to_isomorphism(int n) {
  if (n > 11) throw std::logic_error("isomorphism classes enumerated for n <= 11");
  std::vector<NaiveGraph> current;
  if (n == 0) return current;
  NaiveGraph single;
  single.n = 1;
  single.adj.assign(1, 0);
  current.push_back(single);
  for (int m = 2; m <= n; ++m) {
    std::map<std::uint64_t, NaiveGraph> next;
    for (const NaiveGraph& base : current) {
      for (std::uint32_t nb = 0; nb < (1u << (m - 1)); ++nb) {
        NaiveGraph g;
        g.n = m;
        g.adj = base.adj;
        g.adj.push_back(0);
        for (int u = 0; u < m - 1; ++u) {
          if ((nb >> u) & 1u) g.toggle(u, m - 1);
        }
        next.emplace(canonical_code(g), g);
      }
    }
    current.clear();
    for (auto& [code, g] : next) current.push_back(std::move(g));
  }
  return current;
}

GkOracleInstance gk_instance(unsigned k, std::uint64_t index) {
  auto weight = [](std::uint32_t w) { return std::popcount(w); };
  std::vector<std::uint32_t> high;
  for (std::uint32_t w = 0; w < (1u << k); ++w) {
    if (weight(w) >= 4) high.push_back(w);
  }
  std::vector<std::uint32_t> words;
  for (std::size_t i = 0; i < high.size(); ++i) {
    if ((index >> i) & 1u) words.push_back(high[i]);
  }
  auto covering = [&](std::uint32_t sub) {
    int c = 0;
    for (std::uint32_t w : words) c += (w & sub) == sub;
    return c;
  };
  for (int target : {3, 2}) {
    std::vector<std::uint32_t> forced;
    for (std::uint32_t w = 0; w < (1u << k); ++w) {
      if (weight(w) == target && covering(w) % 2) forced.push_back(w);
    }
    words.insert(words.end(), forced.begin(), forced.end());
  }
  std::sort(words.begin(), words.end());
  if (k + words.size() > 32) throw std::invalid_argument("G_k instance too large for the oracle");
  GkOracleInstance out;
  out.g.n = static_cast<int>(k + words.size());
  out.g.adj.assign(out.g.n, 0);
  for (std::size_t j = 0; j < words.size(); ++j) {
    const int v = static_cast<int>(k + j);
    out.s |= 1u << v;
    for (unsigned i = 0; i < k; ++i) {
      if ((words[j] >> i) & 1u) out.g.toggle(static_cast<int>(i), v);
    }
  }
  return out;
}

int gk_class(const NaiveGraph& g, std::uint32_t s) {
  Mult m(g.n, 0);
  for (int v = 0; v < g.n; ++v) m[v] = (s >> v) & 1u;
  const NaiveGraph h = rlc(g, m, 2);
  if (h == g) return 0;
  // Pair vectors over all vertex pairs, reduced against the LC actions.
  auto pair_vector = [&](const NaiveGraph& a, const NaiveGraph& b) {
    std::vector<bool> x;
    for (int u = 0; u < g.n; ++u) {
      for (int v = u + 1; v < g.n; ++v) x.push_back(a.edge(u, v) != b.edge(u, v));
    }
    return x;
  };
  std::vector<std::vector<bool>> rows;
  for (int v = 0; v < g.n; ++v) {
    if ((s >> v) & 1u) rows.push_back(pair_vector(g, lc(g, v)));
  }
  rows.push_back(pair_vector(g, h));
  // Rank with and without the target row.
  auto rank = [](std::vector<std::vector<bool>> m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
      std::size_t p = r;
      while (p < m.size() && !m[p][c]) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[r]);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i != r && m[i][c]) {
          for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] != m[r][j];
        }
      }
      ++r;
    }
    return r;
  };
  const std::size_t with = rank(rows);
  rows.pop_back();
  return rank(rows) == with ? 1 : 2;
}

}  // namespace oracle
