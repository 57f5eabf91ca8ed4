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

#include "graphlu/equivalence.hpp"

#include <algorithm>
#include <functional>

#include "graphlu/errors.hpp"
#include "graphlu/graph6.hpp"
#include "graphlu/mod2r.hpp"

namespace graphlu {

std::optional<std::size_t> OmegaBasis::pair_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(z_pairs.begin(), z_pairs.end(), Edge{u, v});
  if (it == z_pairs.end() || *it != Edge{u, v}) return std::nullopt;
  return static_cast<std::size_t>(it - z_pairs.begin());
}

BitVec omega_of(const Graph& g, const VertexMultiset& s, const OmegaBasis& basis) {
  BitVec out(basis.z_pairs.size());
  for (auto [u, v] : rlc_toggles(g, s)) {
    auto idx = basis.pair_index(u, v);
    if (!idx) {
      throw InternalError("r-local complementation over X toggled (" + std::to_string(u) + "," +
                          std::to_string(v) + ") outside the Z pairs");
    }
    out.set(*idx);
  }
  return out;
}

std::vector<VertexMultiset> incidence_generators(const Graph& g, unsigned r, const VertexSet& vx,
                                                const VertexSet& k_domain) {
  if (r < 1 || r > kMaxLevel) throw ValidationError("level out of range");
  if (!is_independent_set(g, vx)) throw ValidationError("candidate support is not independent");
  const std::vector<Vertex> xs = vx.to_vector();
  const std::vector<Vertex> ks = k_domain.to_vector();
  std::vector<VertexMultiset> out;
  if (xs.empty()) return out;

  // One equation per K with 2 <= |K| <= r+1 whose common neighbourhood meets
  // vx: sum over Λ^K ∩ vx of 2^(|K|-2+δ) S(u) = 0 mod 2^r.
  MatMod2r a(0, xs.size(), r);
  std::vector<Vertex> chosen;
  std::function<void(std::size_t, const VertexSet&)> dfs = [&](std::size_t start, const VertexSet& lam) {
    const std::size_t k = chosen.size();
    if (k >= 2) {
      const unsigned shift = static_cast<unsigned>(k - 2) + (k == 2 ? 1u : 0u);
      if (shift < r) {
        ModVec row(xs.size(), 0);
        for (std::size_t j = 0; j < xs.size(); ++j) {
          if (lam.contains(xs[j])) row[j] = static_cast<std::uint32_t>(std::uint64_t{1} << shift);
        }
        a.append_row(row);
      }
    }
    if (k == r + 1) return;
    for (std::size_t i = start; i < ks.size(); ++i) {
      VertexSet next = lam & g.neighbors(ks[i]);
      if (next.empty()) continue;
      chosen.push_back(ks[i]);
      dfs(i + 1, next);
      chosen.pop_back();
    }
  };
  dfs(0, vx);

  for (const ModVec& gen : howell_kernel(a)) {
    VertexMultiset s(r);
    for (std::size_t j = 0; j < xs.size(); ++j) s.set(xs[j], gen[j]);
    if (!s.is_zero()) out.push_back(std::move(s));
  }
  return out;
}

OmegaBasis omega_basis(const Graph& g1, unsigned r, const VertexSet& vx, const VertexSet& vz) {
  if (r < 1 || r > kMaxLevel) throw ValidationError("level out of range");
  OmegaBasis basis;
  basis.level = r;
  basis.vx = vx;
  basis.vz = vz;
  const std::vector<Vertex> zs = vz.to_vector();
  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (std::size_t j = i + 1; j < zs.size(); ++j) basis.z_pairs.emplace_back(zs[i], zs[j]);
  }
  std::vector<BitVec> images;
  for (VertexMultiset& s : incidence_generators(g1, r, vx, vz)) {
    images.push_back(omega_of(g1, s, basis));
    basis.generators.push_back(std::move(s));
  }
  for (std::size_t idx : f2_basis_indices(images)) {
    basis.omegas.push_back(images[idx]);
    basis.preimages.push_back(basis.generators[idx]);
  }
  return basis;
}

SharpGraph build_sharp(const Graph& g, const VertexSet& vx, const VertexSet& vz, const OmegaBasis& basis) {
  (void)vz;
  const std::size_t n = g.order();
  SharpGraph sharp;
  sharp.base_order = n;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (!vx.contains(u) && !vx.contains(v)) edges.emplace_back(u, v);
  }
  sharp.groups.resize(basis.omegas.size());
  for (std::size_t i = 0; i < basis.omegas.size(); ++i) {
    for (auto p = basis.omegas[i].next_set(0); p; p = basis.omegas[i].next_set(*p + 1)) {
      const Vertex id = static_cast<Vertex>(n + sharp.new_vertices.size());
      const Edge pair = basis.z_pairs[*p];
      sharp.new_vertices.push_back({i, pair});
      sharp.groups[i].push_back(id);
      edges.emplace_back(pair.first, id);
      edges.emplace_back(pair.second, id);
    }
  }
  const std::size_t total = n + sharp.new_vertices.size();
  if (total > kMaxVertices) {
    throw ResourceError("G# would have " + std::to_string(total) + " vertices (limit " +
                        std::to_string(kMaxVertices) + ")");
  }
  sharp.graph = Graph::from_edges(total, edges);
  return sharp;
}

ConstraintSet sharp_constraints(const SharpGraph& sharp, const VertexSet& vx, const VertexSet& vz) {
  ConstraintSet c(sharp.graph.order());
  vz.for_each([&](Vertex u) { c.fix(QuadVar::B, u, false); });
  vx.for_each([&](Vertex u) { c.fix(QuadVar::B, u, false); });
  for (std::size_t i = 0; i < sharp.new_vertices.size(); ++i) {
    c.fix(QuadVar::C, static_cast<Vertex>(sharp.base_order + i), false);
  }
  for (const auto& group : sharp.groups) {
    for (std::size_t i = 1; i < group.size(); ++i) c.equal(QuadVar::B, group[0], group[i]);
  }
  return c;
}

namespace {

std::vector<LocalOp> reversed(const std::vector<LocalOp>& ops) { return {ops.rbegin(), ops.rend()}; }

Witness assemble(const Graph& g1, const Graph& g2, const StandardFormResult& sf,
                 const std::vector<LocalOp>& middle) {
  Witness w;
  w.source = to_graph6(g1);
  w.target = to_graph6(g2);
  w.ops = sf.w1.ops;
  w.ops.insert(w.ops.end(), middle.begin(), middle.end());
  auto back = reversed(sf.w2.ops);
  w.ops.insert(w.ops.end(), back.begin(), back.end());
  return w;
}

}  // namespace

Decision decide_lcr(const Graph& g1, const Graph& g2, unsigned r, const DecideOptions& options) {
  if (r < 1 || r > kMaxLevel) throw ValidationError("level must be in [1, " + std::to_string(kMaxLevel) + "]");
  if (g1.order() != g2.order()) throw ValidationError("graphs have different orders");
  if (!is_connected(g1) || !is_connected(g2)) throw ValidationError("graphs must be connected");
  Decision out;
  out.level = r;
  if (g1.order() == 1) {
    out.equivalent = true;
    out.witness = Witness{to_graph6(g1), to_graph6(g2), {}};
    return out;
  }

  StandardFormOutcome outcome = standardize_pair(g1, g2, options.standard_form);
  if (auto* ne = std::get_if<NotEquivalent>(&outcome)) {
    out.stage = ne->stage;
    out.reason = ne->reason;
    return out;
  }
  const StandardFormResult& sf = std::get<StandardFormResult>(outcome);
  if (!check_same_types_and_x_neighbourhoods(sf)) {
    out.stage = "types";
    out.reason = "types or X neighbourhoods differ after standardization";
    return out;
  }
  const std::size_t n = g1.order();
  VertexSet vx, vz;
  for (Vertex v = 0; v < n; ++v) {
    if (sf.types1[v] == VertexType::X) vx.insert(v);
    if (sf.types1[v] == VertexType::Z) vz.insert(v);
  }

  const OmegaBasis basis = omega_basis(sf.g1, r, vx, vz);
  std::vector<LocalOp> middle;
  if (basis.omegas.empty()) {
    auto q = solve_constrained(sf.g1, sf.g2, ConstraintSet(n), options.bouchet);
    if (!q) {
      out.stage = "bouchet";
      out.reason = "standardized graphs are not LC-equivalent and no r-local complementation acts";
      return out;
    }
    middle = quad_to_lc_sequence(sf.g1, sf.g2, *q).ops;
  } else {
    const SharpGraph s1 = build_sharp(sf.g1, vx, vz, basis);
    const SharpGraph s2 = build_sharp(sf.g2, vx, vz, basis);
    const ConstraintSet c = sharp_constraints(s1, vx, vz);
    auto q = solve_constrained(s1.graph, s2.graph, c, options.bouchet);
    if (!q) {
      out.stage = "sharp";
      out.reason = "no constrained LC sequence between the G# graphs";
      return out;
    }
    VertexMultiset s(r);
    for (std::size_t i = 0; i < s1.groups.size(); ++i) {
      if (q->b.contains(s1.groups[i].front())) s = multiset_add(s, basis.preimages[i]);
    }
    if (!s.is_zero()) middle.push_back(RlcOp{s});
    // New vertices keep their two Z neighbours throughout the reconstruction,
    // so their complementations commute with the rest and are exactly the
    // toggles already performed by the r-local complementation above.
    for (const LocalOp& op : quad_to_lc_sequence(s1.graph, s2.graph, *q).ops) {
      if (const auto* lc = std::get_if<LcOp>(&op)) {
        if (lc->v >= n || vx.contains(lc->v)) continue;
      } else if (const auto* pv = std::get_if<PivotOp>(&op)) {
        if (pv->u >= n || pv->v >= n) throw InternalError("pivot on a G# auxiliary vertex");
      }
      middle.push_back(op);
    }
  }

  Witness w = assemble(g1, g2, sf, middle);
  if (!verify_witness(g1, w, g2)) throw InternalError("assembled witness does not verify");
  out.equivalent = true;
  out.witness = std::move(w);
  return out;
}

unsigned max_useful_level(std::size_t n) {
  unsigned r = 1;
  while (r < kMaxLevel && n > (std::size_t{1} << (r + 3)) - 1) ++r;
  return r;
}

Decision decide_lu(const Graph& g1, const Graph& g2, const DecideOptions& options) {
  return decide_lcr(g1, g2, max_useful_level(g1.order()), options);
}

Decision decide_lc_pair(const Graph& g1, const Graph& g2, const ConstraintSet& extra,
                        const BouchetOptions& options) {
  if (g1.order() != g2.order()) throw ValidationError("graphs have different orders");
  Decision out;
  out.level = 1;
  auto w = decide_lc(g1, g2, extra, options);
  if (!w) {
    out.stage = "bouchet";
    out.reason = "no quad solution";
    return out;
  }
  out.equivalent = true;
  out.witness = std::move(*w);
  return out;
}

bool verify_witness(const Graph& g1, const Witness& w, const Graph& g2) {
  if (g1.order() != g2.order()) return false;
  if (!w.source.empty() && w.source != to_graph6(g1)) return false;
  if (!w.target.empty() && w.target != to_graph6(g2)) return false;
  Graph g = g1;
  try {
    for (const LocalOp& op : w.ops) apply_op_in_place(g, op);
  } catch (const std::exception&) {
    return false;
  }
  return g == g2;
}

std::size_t min_genuine_support(unsigned r) {
  if (r <= 1) return 0;
  return (std::size_t{1} << (r + 2)) - r - 3;
}

bool genuine_support_bound(const VertexMultiset& s) {
  return s.support().size() >= min_genuine_support(s.level());
}

bool complement_bound(const Graph& g, const VertexMultiset& s) {
  return g.order() - s.support().size() >= static_cast<std::size_t>(s.level()) + 3;
}

bool order_bound(std::size_t n, unsigned r) { return n >= (std::size_t{1} << (r + 2)); }

}  // namespace graphlu
