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

#include "graphlu/bouchet.hpp"

#include <algorithm>
#include <random>

#include "graphlu/errors.hpp"
#include "graphlu/graph6.hpp"
#include "graphlu/orbit.hpp"

namespace graphlu {

BitVec quad_to_vector(const QuadSolution& q, std::size_t n) {
  BitVec x(4 * n);
  for (Vertex v = 0; v < n; ++v) {
    x.set(quad_index(QuadVar::A, v, n), q.a.contains(v));
    x.set(quad_index(QuadVar::B, v, n), q.b.contains(v));
    x.set(quad_index(QuadVar::C, v, n), q.c.contains(v));
    x.set(quad_index(QuadVar::D, v, n), q.d.contains(v));
  }
  return x;
}

QuadSolution quad_from_vector(const BitVec& x, std::size_t n) {
  if (x.size() != 4 * n) throw ValidationError("quad vector has the wrong length");
  QuadSolution q;
  for (Vertex v = 0; v < n; ++v) {
    q.a.set(v, x.get(quad_index(QuadVar::A, v, n)));
    q.b.set(v, x.get(quad_index(QuadVar::B, v, n)));
    q.c.set(v, x.get(quad_index(QuadVar::C, v, n)));
    q.d.set(v, x.get(quad_index(QuadVar::D, v, n)));
  }
  return q;
}

QuadSolution identity_quad(std::size_t n) {
  QuadSolution q;
  q.a = VertexSet::range(n);
  q.d = q.a;
  return q;
}

void ConstraintSet::add(const std::vector<std::pair<QuadVar, Vertex>>& vars, bool value) {
  BitVec row(4 * n);
  for (auto [var, v] : vars) {
    if (v >= n) throw ValidationError("constraint on vertex " + std::to_string(v) + " outside the graph");
    row.flip(quad_index(var, v, n));
  }
  rows.push_back(std::move(row));
  rhs.push_back(value);
}

bool ConstraintSet::satisfied_by(const BitVec& x) const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dot(x) != rhs[i]) return false;
  }
  return true;
}

ConstraintSet constraints_from_json(const nlohmann::json& j, std::size_t n) {
  ConstraintSet out(n);
  try {
    for (const auto& item : j) {
      std::vector<std::pair<QuadVar, Vertex>> vars;
      for (const auto& name : item.at("coeffs")) {
        const std::string s = name.get<std::string>();
        if (s.size() < 3 || s[1] != '_') throw ParseError("bad variable name '" + s + "'");
        QuadVar var;
        switch (s[0]) {
          case 'a':
            var = QuadVar::A;
            break;
          case 'b':
            var = QuadVar::B;
            break;
          case 'c':
            var = QuadVar::C;
            break;
          case 'd':
            var = QuadVar::D;
            break;
          default:
            throw ParseError("bad variable name '" + s + "'");
        }
        std::size_t used = 0;
        const unsigned long v = std::stoul(s.substr(2), &used);
        if (used != s.size() - 2) throw ParseError("bad variable name '" + s + "'");
        if (v >= n) throw ParseError("variable '" + s + "' refers to a vertex outside the graph");
        vars.emplace_back(var, static_cast<Vertex>(v));
      }
      const int rhs = item.at("rhs").get<int>();
      if (rhs != 0 && rhs != 1) throw ParseError("constraint rhs must be 0 or 1");
      out.add(vars, rhs == 1);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed constraints: ") + e.what());
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const ParseError*>(&e)) throw;
    throw ParseError(std::string("malformed constraints: ") + e.what());
  }
  return out;
}

nlohmann::json constraints_to_json(const ConstraintSet& c) {
  static const char kNames[] = {'a', 'b', 'c', 'd'};
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (auto k = c.rows[i].next_set(0); k; k = c.rows[i].next_set(*k + 1)) {
      coeffs.push_back(std::string(1, kNames[*k / c.n]) + "_" + std::to_string(*k % c.n));
    }
    out.push_back({{"coeffs", coeffs}, {"rhs", c.rhs[i] ? 1 : 0}});
  }
  return out;
}

MatF2 build_system_i(const Graph& g1, const Graph& g2) {
  const std::size_t n = g1.order();
  if (g2.order() != n) throw ValidationError("build_system_i: order mismatch");
  MatF2 m(n * n, 4 * n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      BitVec& row = m.rows[u * n + v];
      (g1.neighbors(u) & g2.neighbors(v)).for_each([&](Vertex w) { row.set(quad_index(QuadVar::B, w, n)); });
      if (g1.adjacent(u, v)) row.set(quad_index(QuadVar::A, v, n));
      if (g2.adjacent(v, u)) row.set(quad_index(QuadVar::D, u, n));
      if (u == v) row.set(quad_index(QuadVar::C, u, n));
    }
  }
  return m;
}

bool satisfies_i(const Graph& g1, const Graph& g2, const QuadSolution& q) {
  const std::size_t n = g1.order();
  if (g2.order() != n) throw ValidationError("satisfies_i: order mismatch");
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      std::size_t total = (q.b & g1.neighbors(u) & g2.neighbors(v)).size();
      total += (q.a.contains(v) && g1.adjacent(u, v)) ? 1 : 0;
      total += (q.d.contains(u) && g2.adjacent(v, u)) ? 1 : 0;
      total += (u == v && q.c.contains(u)) ? 1 : 0;
      if (total & 1) return false;
    }
  }
  return true;
}

bool check_ii(const QuadSolution& q, std::size_t n) {
  return ((q.a & q.d) ^ (q.b & q.c)) == VertexSet::range(n);
}

AffineSolution solution_space(const Graph& g1, const Graph& g2, const ConstraintSet& extra) {
  const std::size_t n = g1.order();
  MatF2 m = build_system_i(g1, g2);
  BitVec rhs(m.rows.size() + extra.rows.size());
  if (!extra.empty()) {
    if (extra.n != n) throw ValidationError("constraint set order does not match the graphs");
    for (std::size_t i = 0; i < extra.rows.size(); ++i) {
      m.rows.push_back(extra.rows[i]);
      rhs.set(n * n + i, extra.rhs[i]);
    }
  }
  return f2_solve_affine(m, rhs);
}

namespace {

QuadSolution quad_xor(QuadSolution x, const QuadSolution& y) {
  x.a ^= y.a;
  x.b ^= y.b;
  x.c ^= y.c;
  x.d ^= y.d;
  return x;
}

// Affine space p + span(dirs) or a finite list of points.
struct SolutionPiece {
  bool affine = true;
  QuadSolution point;
  std::vector<QuadSolution> dirs;
  std::vector<QuadSolution> points;
};

// Gray-code enumeration of p + span(basis); f returns true to stop.
template <class F>
bool enumerate_span(const QuadSolution& p, const std::vector<QuadSolution>& basis, F&& f) {
  QuadSolution x = p;
  if (f(x)) return true;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    x = quad_xor(x, basis[static_cast<std::size_t>(std::countr_zero(i))]);
    if (f(x)) return true;
  }
  return false;
}

// Candidates p, p + k_i, p + k_i + k_j with the basis sorted by weight.
std::optional<QuadSolution> pair_sum_search(const QuadSolution& p, std::vector<QuadSolution> basis,
                                            const std::vector<std::size_t>& weights, std::size_t n) {
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return weights[x] < weights[y]; });
  if (check_ii(p, n)) return p;
  for (std::size_t i = 0; i < order.size(); ++i) {
    QuadSolution xi = quad_xor(p, basis[order[i]]);
    if (check_ii(xi, n)) return xi;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    QuadSolution xi = quad_xor(p, basis[order[i]]);
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      QuadSolution xij = quad_xor(xi, basis[order[j]]);
      if (check_ii(xij, n)) return xij;
    }
  }
  return std::nullopt;
}

struct Space {
  bool consistent = false;
  QuadSolution p;
  std::vector<QuadSolution> basis;
  std::vector<std::size_t> weights;
};

Space quad_space(const Graph& g1, const Graph& g2, const ConstraintSet& extra) {
  const std::size_t n = g1.order();
  AffineSolution sol = solution_space(g1, g2, extra);
  Space s;
  if (!sol.particular) return s;
  s.consistent = true;
  s.p = quad_from_vector(*sol.particular, n);
  for (const auto& k : sol.kernel) {
    s.basis.push_back(quad_from_vector(k, n));
    s.weights.push_back(k.popcount());
  }
  return s;
}

std::optional<QuadSolution> exhaustive(const Space& s, std::size_t n) {
  std::optional<QuadSolution> found;
  enumerate_span(s.p, s.basis, [&](const QuadSolution& x) {
    if (check_ii(x, n)) {
      found = x;
      return true;
    }
    return false;
  });
  return found;
}

std::optional<QuadSolution> solve_connected(const Graph& g1, const Graph& g2, const ConstraintSet& extra,
                                            const BouchetOptions& options) {
  const std::size_t n = g1.order();
  Space s = quad_space(g1, g2, extra);
  if (!s.consistent) return std::nullopt;
  if (s.basis.size() <= 4) return exhaustive(s, n);
  if (auto hit = pair_sum_search(s.p, s.basis, s.weights, n)) return hit;
  // The pair-sum argument needs an even-degree vertex in both graphs.
  if (has_even_degree_vertex(g1) && has_even_degree_vertex(g2)) return std::nullopt;
  const bool alpha = is_class_alpha(g1) || is_class_alpha(g2);
  if (extra.empty() && !alpha) return std::nullopt;
  if (!options.fallback) {
    throw ClassAlphaUnresolved("no even-degree vertex and the fallback is disabled");
  }
  if (s.basis.size() <= options.exhaustive_dim_cap) return exhaustive(s, n);
  if (extra.empty() && n <= options.bfs_order_cap) {
    OrbitIndex idx = lc_orbit(g1, std::nullopt, OrbitOptions{options.bfs_order_cap, 2'000'000});
    if (auto i = idx.find(g2)) return lc_sequence_to_quad(g1, idx.path_to(*i));
    return std::nullopt;
  }
  throw ClassAlphaUnresolved("solution space of dimension " + std::to_string(s.basis.size()) +
                             " on graphs without an even-degree vertex (order " + std::to_string(n) + ")");
}

// Solutions of (i) and (ii) for one connected component, no extra constraints.
std::optional<SolutionPiece> component_piece(const Graph& h1, const Graph& h2, const BouchetOptions& options) {
  const std::size_t m = h1.order();
  Space s = quad_space(h1, h2, ConstraintSet{});
  if (!s.consistent) return std::nullopt;
  const bool suspect = !has_even_degree_vertex(h1) || !has_even_degree_vertex(h2);
  const std::size_t d = s.basis.size();

  auto from_points = [&](std::vector<QuadSolution> pts) -> std::optional<SolutionPiece> {
    if (pts.empty()) return std::nullopt;
    SolutionPiece piece;
    piece.point = pts.front();
    std::vector<BitVec> diffs;
    for (const auto& x : pts) diffs.push_back(quad_to_vector(quad_xor(x, pts.front()), m));
    std::vector<BitVec> basis = f2_basis_from_generators(diffs);
    if (basis.size() < 64 && (std::size_t{1} << basis.size()) == pts.size()) {
      for (const auto& b : basis) piece.dirs.push_back(quad_from_vector(b, m));
    } else {
      piece.affine = false;
      piece.points = std::move(pts);
    }
    return piece;
  };
  auto enumerate_all = [&]() {
    std::vector<QuadSolution> pts;
    enumerate_span(s.p, s.basis, [&](const QuadSolution& x) {
      if (check_ii(x, m)) pts.push_back(x);
      return false;
    });
    return from_points(std::move(pts));
  };

  if (d <= 16 || (suspect && d <= options.exhaustive_dim_cap)) return enumerate_all();
  if (suspect && (is_class_alpha(h1) || is_class_alpha(h2))) {
    throw ClassAlphaUnresolved("component of order " + std::to_string(m) +
                               " in class alpha with a large solution space");
  }
  // Outside class α the solutions form an affine subspace of codimension at
  // most 2: c + ker(φ) for a linear φ into F2^2.
  auto c = pair_sum_search(s.p, s.basis, s.weights, m);
  if (!c) return std::nullopt;
  std::vector<QuadSolution> kernel;
  std::vector<std::size_t> reps;
  for (std::size_t j = 0; j < d; ++j) {
    if (check_ii(quad_xor(*c, s.basis[j]), m)) {
      kernel.push_back(s.basis[j]);
      continue;
    }
    bool placed = false;
    for (std::size_t r : reps) {
      if (check_ii(quad_xor(quad_xor(*c, s.basis[j]), s.basis[r]), m)) {
        kernel.push_back(quad_xor(s.basis[j], s.basis[r]));
        placed = true;
        break;
      }
    }
    if (!placed) reps.push_back(j);
  }
  if (reps.size() > 3) throw InternalError("solution set is not an affine subspace of codimension <= 2");
  if (reps.size() == 3) {
    QuadSolution t = quad_xor(quad_xor(s.basis[reps[0]], s.basis[reps[1]]), s.basis[reps[2]]);
    if (!check_ii(quad_xor(*c, t), m)) throw InternalError("inconsistent codimension-2 structure");
    kernel.push_back(t);
  }
  // Spot check of the affine structure.
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 64; ++trial) {
    QuadSolution x = *c;
    for (const auto& k : kernel) {
      if (rng() & 1) x = quad_xor(x, k);
    }
    if (!check_ii(x, m)) throw InternalError("affine structure check failed");
  }
  SolutionPiece piece;
  piece.point = *c;
  piece.dirs = std::move(kernel);
  return piece;
}

QuadSolution embed(const QuadSolution& local, const std::vector<Vertex>& ids) {
  QuadSolution out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const Vertex v = static_cast<Vertex>(i);
    out.a.set(ids[i], local.a.contains(v));
    out.b.set(ids[i], local.b.contains(v));
    out.c.set(ids[i], local.c.contains(v));
    out.d.set(ids[i], local.d.contains(v));
  }
  return out;
}

std::optional<QuadSolution> solve_components(const Graph& g1, const Graph& g2, const std::vector<VertexSet>& comps,
                                             const ConstraintSet& extra, const BouchetOptions& options) {
  const std::size_t n = g1.order();
  QuadSolution base;
  std::vector<QuadSolution> dirs;
  std::vector<std::vector<QuadSolution>> choices;
  for (const auto& comp : comps) {
    const std::vector<Vertex> ids = comp.to_vector();
    auto piece = component_piece(induced_subgraph(g1, comp), induced_subgraph(g2, comp), options);
    if (!piece) return std::nullopt;
    if (piece->affine) {
      base = quad_xor(base, embed(piece->point, ids));
      for (const auto& d : piece->dirs) dirs.push_back(embed(d, ids));
    } else {
      std::vector<QuadSolution> pts;
      for (const auto& p : piece->points) pts.push_back(embed(p, ids));
      choices.push_back(std::move(pts));
    }
  }
  double product = 1;
  for (const auto& c : choices) product *= static_cast<double>(c.size());
  if (product > static_cast<double>(options.product_cap)) {
    throw ResourceError("component solution product of " + std::to_string(product) + " exceeds the cap");
  }
  std::vector<BitVec> dir_vecs;
  for (const auto& d : dirs) dir_vecs.push_back(quad_to_vector(d, n));
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    QuadSolution p = base;
    for (std::size_t i = 0; i < choices.size(); ++i) p = quad_xor(p, choices[i][pick[i]]);
    if (extra.empty()) return p;
    // Solve extra · (p + Σ t_j dir_j) = rhs for t.
    const BitVec pv = quad_to_vector(p, n);
    MatF2 m(extra.rows.size(), dir_vecs.size());
    BitVec rhs(extra.rows.size());
    for (std::size_t r = 0; r < extra.rows.size(); ++r) {
      for (std::size_t j = 0; j < dir_vecs.size(); ++j) m.rows[r].set(j, extra.rows[r].dot(dir_vecs[j]));
      rhs.set(r, extra.rhs[r] != extra.rows[r].dot(pv));
    }
    AffineSolution t = f2_solve_affine(m, rhs);
    if (t.particular) {
      for (std::size_t j = 0; j < dir_vecs.size(); ++j) {
        if (t.particular->get(j)) p = quad_xor(p, dirs[j]);
      }
      return p;
    }
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) return std::nullopt;
  }
}

}  // namespace

std::optional<QuadSolution> solve_constrained(const Graph& g1, const Graph& g2, const ConstraintSet& extra,
                                              const BouchetOptions& options) {
  const std::size_t n = g1.order();
  if (g2.order() != n) throw ValidationError("solve_constrained: order mismatch");
  if (!extra.empty() && extra.n != n) throw ValidationError("constraint set order does not match the graphs");
  if (g1 == g2) {
    QuadSolution id = identity_quad(n);
    if (extra.empty() || extra.satisfied_by(quad_to_vector(id, n))) return id;
  }
  std::vector<VertexSet> comps = connected_components(g1);
  if (comps != connected_components(g2)) return std::nullopt;
  std::optional<QuadSolution> q;
  if (comps.size() <= 1) {
    q = solve_connected(g1, g2, extra, options);
  } else {
    q = solve_components(g1, g2, comps, extra, options);
  }
  if (q && (!check_ii(*q, n) || !satisfies_i(g1, g2, *q) ||
            (!extra.empty() && !extra.satisfied_by(quad_to_vector(*q, n))))) {
    throw InternalError("solver returned an invalid quad");
  }
  return q;
}

int quad_case(const QuadSolution& q, Vertex v) {
  const int code = (q.a.contains(v) ? 8 : 0) | (q.b.contains(v) ? 4 : 0) | (q.c.contains(v) ? 2 : 0) |
                   (q.d.contains(v) ? 1 : 0);
  switch (code) {
    case 0b1001:
      return 1;
    case 0b1101:
      return 2;
    case 0b1011:
      return 3;
    case 0b0110:
      return 4;
    case 0b1110:
      return 5;
    case 0b0111:
      return 6;
    default:
      return 0;
  }
}

namespace {

void lc_update(QuadSolution& q, const Graph& g, Vertex w) {
  if (q.c.contains(w)) q.a.flip(w);
  if (q.d.contains(w)) q.b.flip(w);
  q.c ^= g.neighbors(w) & q.a;
  q.d ^= g.neighbors(w) & q.b;
}

void pivot_update(QuadSolution& q, Vertex u, Vertex v) {
  for (Vertex w : {u, v}) {
    const bool a = q.a.contains(w), b = q.b.contains(w), c = q.c.contains(w), d = q.d.contains(w);
    q.a.set(w, c);
    q.c.set(w, a);
    q.b.set(w, d);
    q.d.set(w, b);
  }
}

std::size_t case_13_count(const QuadSolution& q, std::size_t n) {
  std::size_t total = 0;
  for (Vertex v = 0; v < n; ++v) {
    const int k = quad_case(q, v);
    total += (k == 1 || k == 3) ? 1 : 0;
  }
  return total;
}

}  // namespace

Witness quad_to_lc_sequence(const Graph& g1, const Graph& g2, const QuadSolution& q, ReconstructionTrace* trace) {
  const std::size_t n = g1.order();
  if (g2.order() != n) throw ValidationError("quad_to_lc_sequence: order mismatch");
  if (!check_ii(q, n) || !satisfies_i(g1, g2, q)) {
    throw ValidationError("quad_to_lc_sequence: quad does not satisfy (i) and (ii)");
  }
  Witness w;
  w.source = to_graph6(g1);
  w.target = to_graph6(g2);
  Graph g = g1;
  QuadSolution cur = q;
  if (trace) trace->measure.push_back(case_13_count(cur, n));
  auto find_case = [&](int c1, int c2) -> std::optional<Vertex> {
    for (Vertex v = 0; v < n; ++v) {
      const int k = quad_case(cur, v);
      if (k == c1 || k == c2) return v;
    }
    return std::nullopt;
  };
  while (true) {
    while (auto u = find_case(2, 6)) {
      lc_update(cur, g, *u);
      g.local_complement_in_place(*u);
      w.ops.push_back(LcOp{*u});
      if (trace) trace->measure.push_back(case_13_count(cur, n));
    }
    auto u = find_case(4, 5);
    if (!u) break;
    std::optional<Vertex> v;
    g.neighbors(*u).for_each([&](Vertex x) {
      const int k = quad_case(cur, x);
      if (!v && (k == 4 || k == 5)) v = x;
    });
    if (!v) throw InternalError("no case-4/5 neighbour for a case-4/5 vertex");
    g.pivot_in_place(*u, *v);
    pivot_update(cur, *u, *v);
    w.ops.push_back(PivotOp{*u, *v});
    if (trace) trace->measure.push_back(case_13_count(cur, n));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (quad_case(cur, v) != 1) throw InternalError("reconstruction ended with a vertex outside case 1");
  }
  if (!(g == g2)) throw InternalError("reconstruction did not reach the target graph");
  return w;
}

QuadSolution lc_sequence_to_quad(const Graph& g1, const std::vector<LocalOp>& ops) {
  std::vector<LocalOp> seq = expand_pivots(ops);
  for (const auto& op : seq) {
    if (!std::holds_alternative<LcOp>(op)) throw ValidationError("lc_sequence_to_quad: only LC and pivot ops");
  }
  Graph g = apply_ops(g1, seq);
  QuadSolution q = identity_quad(g1.order());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    const Vertex w = std::get<LcOp>(*it).v;
    lc_update(q, g, w);
    g.local_complement_in_place(w);
  }
  return q;
}

std::string to_string(CliffordLabel label) {
  switch (label) {
    case CliffordLabel::I:
      return "I";
    case CliffordLabel::ZHalf:
      return "Z(pi/2)";
    case CliffordLabel::XHalf:
      return "X(pi/2)";
    case CliffordLabel::H:
      return "H";
    case CliffordLabel::ZHalfH:
      return "Z(pi/2)H";
    case CliffordLabel::XHalfH:
      return "X(pi/2)H";
  }
  return "?";
}

std::vector<CliffordLabel> clifford_labels(const QuadSolution& q, std::size_t n) {
  if (!check_ii(q, n)) throw ValidationError("clifford_labels: quad violates (ii)");
  std::vector<CliffordLabel> out(n);
  for (Vertex v = 0; v < n; ++v) {
    const bool a = q.a.contains(v), b = q.b.contains(v), c = q.c.contains(v), d = q.d.contains(v);
    if (!(b && c)) {
      out[v] = !b ? (!c ? CliffordLabel::I : CliffordLabel::ZHalf) : CliffordLabel::XHalf;
    } else {
      out[v] = !a ? (!d ? CliffordLabel::H : CliffordLabel::ZHalfH) : CliffordLabel::XHalfH;
    }
  }
  return out;
}

bool has_even_degree_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 == 0) return true;
  }
  return false;
}

bool is_class_alpha(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || has_even_degree_vertex(g)) return false;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v) && g.neighbors(u).intersection_size(g.neighbors(v)) % 2) return false;
    }
  }
  // Parity of Σ (t(e) + 1) along the tree path from the root of each BFS tree.
  std::vector<int> potential(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (potential[root] >= 0) continue;
    potential[root] = 0;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      g.neighbors(x).for_each([&](Vertex y) {
        if (potential[y] >= 0) return;
        const int weight = static_cast<int>((g.neighbors(x).intersection_size(g.neighbors(y)) + 1) % 2);
        potential[y] = potential[x] ^ weight;
        queue.push_back(y);
      });
    }
  }
  for (auto [u, v] : g.edges()) {
    const int weight = static_cast<int>((g.neighbors(u).intersection_size(g.neighbors(v)) + 1) % 2);
    // Tree edges contribute zero; other edges close a fundamental cycle.
    if ((potential[u] ^ potential[v] ^ weight) != 0) return false;
  }
  return true;
}

std::optional<Witness> decide_lc(const Graph& g1, const Graph& g2, const ConstraintSet& extra,
                                 const BouchetOptions& options) {
  auto q = solve_constrained(g1, g2, extra, options);
  if (!q) return std::nullopt;
  return quad_to_lc_sequence(g1, g2, *q);
}

}  // namespace graphlu
