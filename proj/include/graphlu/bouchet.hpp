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

#include <json.hpp>

#include "graphlu/f2.hpp"
#include "graphlu/graph.hpp"
#include "graphlu/witness.hpp"

namespace graphlu {

// (A, B, C, D). As an F2 vector of length 4n the coordinates are
// a_0..a_{n-1}, b_*, c_*, d_*.
struct QuadSolution {
  VertexSet a, b, c, d;
  friend bool operator==(const QuadSolution&, const QuadSolution&) = default;
};

enum class QuadVar { A = 0, B = 1, C = 2, D = 3 };
inline std::size_t quad_index(QuadVar var, Vertex v, std::size_t n) {
  return static_cast<std::size_t>(var) * n + v;
}
BitVec quad_to_vector(const QuadSolution& q, std::size_t n);
QuadSolution quad_from_vector(const BitVec& x, std::size_t n);
// A = D = V, B = C = ∅.
QuadSolution identity_quad(std::size_t n);

// Extra linear constraints over the 4n quad variables.
struct ConstraintSet {
  std::size_t n = 0;
  std::vector<BitVec> rows;
  std::vector<bool> rhs;

  explicit ConstraintSet(std::size_t order = 0) : n(order) {}
  bool empty() const { return rows.empty(); }
  // sum of the listed variables = value.
  void add(const std::vector<std::pair<QuadVar, Vertex>>& vars, bool value);
  void fix(QuadVar var, Vertex v, bool value) { add({{var, v}}, value); }
  void equal(QuadVar var, Vertex u, Vertex v) { add({{var, u}, {var, v}}, false); }
  bool satisfied_by(const BitVec& x) const;
};

// [{"coeffs": ["b_0", "b_3"], "rhs": 0}, ...]
ConstraintSet constraints_from_json(const nlohmann::json& j, std::size_t n);
nlohmann::json constraints_to_json(const ConstraintSet& c);

// n^2 equations of condition (i), row u*n+v, over the 4n quad variables.
MatF2 build_system_i(const Graph& g1, const Graph& g2);
// Condition (i) evaluated pair by pair from the cardinality form.
bool satisfies_i(const Graph& g1, const Graph& g2, const QuadSolution& q);
// (A ∩ D) Δ (B ∩ C) = V.
bool check_ii(const QuadSolution& q, std::size_t n);

// Solutions of condition (i) together with the extra constraints.
AffineSolution solution_space(const Graph& g1, const Graph& g2, const ConstraintSet& extra);

struct BouchetOptions {
  // Exact search by exhaustive enumeration when the main argument does not
  // apply (class α, or constrained graphs without an even-degree vertex).
  bool fallback = true;
  std::size_t exhaustive_dim_cap = 22;
  // Unconstrained orbit search when enumeration is too large.
  std::size_t bfs_order_cap = 12;
  // Largest product of per-component solution lists tried on disconnected
  // inputs.
  std::size_t product_cap = 100'000;
};

// A quad satisfying (i), (ii) and `extra`, or nothing when none exists.
// Throws ClassAlphaUnresolved when no exact method applies.
std::optional<QuadSolution> solve_constrained(const Graph& g1, const Graph& g2,
                                              const ConstraintSet& extra,
                                              const BouchetOptions& options = {});

// Case of a vertex (1..6) for a quad satisfying (ii); 0 otherwise.
int quad_case(const QuadSolution& q, Vertex v);

struct ReconstructionTrace {
  // Number of vertices in case 1 or 3 after each iteration, starting with the
  // initial count.
  std::vector<std::size_t> measure;
};

// LC / pivot sequence taking g1 to g2 from a valid quad.
Witness quad_to_lc_sequence(const Graph& g1, const Graph& g2, const QuadSolution& q,
                            ReconstructionTrace* trace = nullptr);
// Quad for (g1, apply_ops(g1, ops)); ops must be LC or pivot.
QuadSolution lc_sequence_to_quad(const Graph& g1, const std::vector<LocalOp>& ops);

enum class CliffordLabel { I, ZHalf, XHalf, H, ZHalfH, XHalfH };
std::string to_string(CliffordLabel label);
std::vector<CliffordLabel> clifford_labels(const QuadSolution& q, std::size_t n);

bool has_even_degree_vertex(const Graph& g);
// All degrees odd, non-adjacent pairs share an even number of neighbours, and
// every cycle C satisfies sum over e in C of (t(e) + 1) = 0 mod 2 where t(e)
// counts triangles on e. The cycle condition is checked on a fundamental
// cycle basis.
bool is_class_alpha(const Graph& g);

// Convenience: solve then reconstruct.
std::optional<Witness> decide_lc(const Graph& g1, const Graph& g2, const ConstraintSet& extra = ConstraintSet{},
                                 const BouchetOptions& options = {});

}  // namespace graphlu
