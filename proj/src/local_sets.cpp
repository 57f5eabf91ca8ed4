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

#include "graphlu/local_sets.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "graphlu/errors.hpp"
#include "graphlu/f2.hpp"

namespace graphlu {

namespace {

// Calls f on every nonzero combination of `basis`, in Gray-code order.
template <class F>
void for_each_nonzero_combination(const std::vector<VertexSet>& basis, F&& f) {
  VertexSet current;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    current ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    f(current);
  }
}

void check_kernel_cap(std::size_t dim, const LocalSetCaps& caps) {
  if (dim > caps.max_kernel_dim) {
    throw ResourceError("local set kernel of dimension " + std::to_string(dim) +
                        " exceeds the enumeration cap " + std::to_string(caps.max_kernel_dim));
  }
}

// Dimension of a minimal local set from its kernel basis, or nothing.
std::optional<int> dimension_from_kernel(const Graph& g, const VertexSet& l,
                                         const std::vector<VertexSet>& basis) {
  const std::size_t d = basis.size();
  if (d == 0 || d > 2) return std::nullopt;
  std::vector<VertexSet> odd;
  for (const auto& k : basis) odd.push_back(odd_neighborhood(g, k));
  // L is minimal iff for every w in L the only kernel element avoiding w in
  // both D and Odd(D) is zero, i.e. the 2 x d membership matrix at w has
  // full column rank.
  bool minimal = true;
  l.for_each([&](Vertex w) {
    if (!minimal) return;
    if (d == 1) {
      minimal = basis[0].contains(w) || odd[0].contains(w);
      return;
    }
    const int c0 = (basis[0].contains(w) ? 1 : 0) | (odd[0].contains(w) ? 2 : 0);
    const int c1 = (basis[1].contains(w) ? 1 : 0) | (odd[1].contains(w) ? 2 : 0);
    minimal = c0 && c1 && c0 != c1;
  });
  if (!minimal) return std::nullopt;
  return static_cast<int>(d);
}

}  // namespace

VertexSet MlsCover::covered() const {
  VertexSet out;
  for (const auto& rec : sets) out |= rec.set;
  return out;
}

bool MlsCover::contains(const VertexSet& l) const {
  return std::any_of(sets.begin(), sets.end(), [&](const auto& rec) { return rec.set == l; });
}

char type_char(VertexType t) {
  switch (t) {
    case VertexType::X:
      return 'X';
    case VertexType::Y:
      return 'Y';
    case VertexType::Z:
      return 'Z';
    case VertexType::Bottom:
      return '_';
  }
  return '?';
}

std::vector<VertexSet> local_set_kernel(const Graph& g, const VertexSet& l) {
  const std::vector<Vertex> members = l.to_vector();
  if (!members.empty() && members.back() >= g.order()) {
    throw ValidationError("local set member outside the graph");
  }
  const VertexSet outside = g.vertices() - l;
  MatF2 a(0, members.size());
  outside.for_each([&](Vertex v) {
    BitVec row(members.size());
    bool any = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (g.adjacent(v, members[i])) {
        row.set(i);
        any = true;
      }
    }
    if (any) a.rows.push_back(std::move(row));
  });
  AffineSolution sol = f2_solve_affine(a, BitVec(a.rows.size()));
  std::vector<VertexSet> out;
  for (const auto& k : sol.kernel) {
    VertexSet d;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (k.get(i)) d.insert(members[i]);
    }
    out.push_back(d);
  }
  return out;
}

std::vector<VertexSet> generators_of(const Graph& g, const VertexSet& l, const LocalSetCaps& caps) {
  std::vector<VertexSet> basis = local_set_kernel(g, l);
  check_kernel_cap(basis.size(), caps);
  std::vector<VertexSet> out;
  for_each_nonzero_combination(basis, [&](const VertexSet& d) {
    if ((d | odd_neighborhood(g, d)) == l) out.push_back(d);
  });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

bool is_local_set(const Graph& g, const VertexSet& l) {
  if (l.empty()) return false;
  std::vector<VertexSet> basis = local_set_kernel(g, l);
  // Fast reject: some member of L is missed by the whole kernel.
  VertexSet reached;
  for (const auto& k : basis) reached |= k | odd_neighborhood(g, k);
  if (reached != l) return false;
  bool found = false;
  check_kernel_cap(basis.size(), LocalSetCaps{});
  for_each_nonzero_combination(basis, [&](const VertexSet& d) {
    if (!found && (d | odd_neighborhood(g, d)) == l) found = true;
  });
  return found;
}

std::optional<int> mls_dimension(const Graph& g, const VertexSet& l) {
  if (l.empty()) return std::nullopt;
  return dimension_from_kernel(g, l, local_set_kernel(g, l));
}

bool is_minimal_local_set(const Graph& g, const VertexSet& l) { return mls_dimension(g, l).has_value(); }

bool mls_dimension_equal(const Graph& g1, const Graph& g2, const VertexSet& l) {
  auto d1 = mls_dimension(g1, l);
  auto d2 = mls_dimension(g2, l);
  return d1 && d2 && *d1 == *d2;
}

LocalSetRecord make_record(const Graph& g, const VertexSet& l, const LocalSetCaps& caps) {
  auto dim = mls_dimension(g, l);
  if (!dim) throw ValidationError("not a minimal local set: " + l.to_string());
  LocalSetRecord rec;
  rec.set = l;
  rec.dimension = *dim;
  rec.generators = generators_of(g, l, caps);
  const std::size_t expected = (std::size_t{1} << *dim) - 1;
  if (rec.generators.size() != expected) {
    throw InternalError("minimal local set " + l.to_string() + " has " +
                        std::to_string(rec.generators.size()) + " generators, expected " +
                        std::to_string(expected));
  }
  return rec;
}

std::vector<VertexSet> minimal_local_sets_within(const Graph& g, const VertexSet& l,
                                                 const LocalSetCaps& caps) {
  std::vector<VertexSet> basis = local_set_kernel(g, l);
  check_kernel_cap(basis.size(), caps);
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<VertexSet> out;
  for_each_nonzero_combination(basis, [&](const VertexSet& d) {
    VertexSet inner = d | odd_neighborhood(g, d);
    if (!seen.insert(inner).second) return;
    if (is_minimal_local_set(g, inner)) out.push_back(inner);
  });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

MlsCover mls_cover(const Graph& g, const LocalSetCaps& caps) {
  const std::size_t n = g.order();
  MlsCover cover;
  VertexSet covered;
  std::unordered_map<VertexSet, bool, VertexSetHash> minimal_cache;
  auto is_mls = [&](const VertexSet& l) {
    auto it = minimal_cache.find(l);
    if (it != minimal_cache.end()) return it->second;
    bool m = is_minimal_local_set(g, l);
    minimal_cache.emplace(l, m);
    return m;
  };
  // Kernels this small are expanded to reach minimal local sets nested
  // inside a non-minimal one.
  constexpr std::size_t kInnerKernelDim = 4;

  while (true) {
    const auto v = (g.vertices() - covered).first();
    if (!v) break;
    std::optional<VertexSet> best;
    auto consider = [&](const VertexSet& l) {
      if (!best || lex_less(l, *best)) best = l;
    };
    const std::size_t max_size = std::min(caps.max_generator_size, n);
    for (std::size_t s = 1; s <= max_size && !best; ++s) {
      std::vector<Vertex> idx(s);
      for (std::size_t i = 0; i < s; ++i) idx[i] = static_cast<Vertex>(i);
      while (true) {
        VertexSet d;
        for (Vertex x : idx) d.insert(x);
        VertexSet l = d | odd_neighborhood(g, d);
        if (l.contains(*v)) {
          if (is_mls(l)) {
            consider(l);
          } else {
            std::vector<VertexSet> basis = local_set_kernel(g, l);
            if (basis.size() <= kInnerKernelDim) {
              for_each_nonzero_combination(basis, [&](const VertexSet& dd) {
                VertexSet inner = dd | odd_neighborhood(g, dd);
                if (inner.contains(*v) && is_mls(inner)) consider(inner);
              });
            }
          }
        }
        // Next combination in lexicographic order.
        std::size_t i = s;
        while (i > 0 && idx[i - 1] == n - s + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    if (!best) {
      throw ResourceError("no minimal local set containing vertex " + std::to_string(*v) +
                          " found with generators of size <= " +
                          std::to_string(caps.max_generator_size));
    }
    cover.sets.push_back(make_record(g, *best, caps));
    covered |= *best;
  }
  return cover;
}

std::vector<VertexType> vertex_types(const Graph& g, const MlsCover& cover) {
  const std::size_t n = g.order();
  std::vector<std::optional<VertexType>> acc(n);
  for (const auto& rec : cover.sets) {
    std::vector<VertexSet> basis = local_set_kernel(g, rec.set);
    auto dim = dimension_from_kernel(g, rec.set, basis);
    if (!dim) throw ValidationError("cover set " + rec.set.to_string() + " is not a minimal local set");
    const VertexSet d = basis[0];
    const VertexSet odd = odd_neighborhood(g, d);
    rec.set.for_each([&](Vertex u) {
      VertexType t = VertexType::Bottom;
      if (*dim == 1) {
        const bool in_d = d.contains(u);
        const bool in_odd = odd.contains(u);
        t = in_d ? (in_odd ? VertexType::Y : VertexType::X) : VertexType::Z;
      }
      if (!acc[u]) {
        acc[u] = t;
      } else if (*acc[u] != t) {
        acc[u] = VertexType::Bottom;
      }
    });
  }
  std::vector<VertexType> out(n);
  for (Vertex u = 0; u < n; ++u) {
    if (!acc[u]) throw ValidationError("vertex " + std::to_string(u) + " is not covered");
    out[u] = *acc[u];
  }
  return out;
}

bool is_cover_of(const Graph& g, const MlsCover& cover) {
  for (const auto& rec : cover.sets) {
    if (!rec.set.is_subset_of(g.vertices())) return false;
    if (!is_minimal_local_set(g, rec.set)) return false;
  }
  return cover.covered() == g.vertices();
}

nlohmann::json cover_to_json(const MlsCover& cover) {
  nlohmann::json sets = nlohmann::json::array();
  for (const auto& rec : cover.sets) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& d : rec.generators) gens.push_back(d.to_vector());
    sets.push_back({{"set", rec.set.to_vector()}, {"dimension", rec.dimension}, {"generators", gens}});
  }
  return {{"sets", sets}};
}

std::string types_to_string(const std::vector<VertexType>& types) {
  std::string out;
  for (auto t : types) out.push_back(type_char(t));
  return out;
}

}  // namespace graphlu
