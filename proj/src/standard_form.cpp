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

#include "graphlu/standard_form.hpp"

#include <array>
#include <optional>

#include "graphlu/errors.hpp"
#include "graphlu/graph6.hpp"

namespace graphlu {

std::size_t type_measure(const std::vector<VertexType>& types) {
  std::size_t total = 0;
  for (auto t : types) total += t == VertexType::Y ? 2 : (t == VertexType::X ? 1 : 0);
  return total;
}

bool is_standard_form(const Graph& g, const MlsCover& cover, const std::vector<VertexType>& types) {
  for (Vertex u = 0; u < g.order(); ++u) {
    if (types[u] == VertexType::Y) return false;
    if (types[u] != VertexType::X) continue;
    bool ok = true;
    g.neighbors(u).for_each([&](Vertex v) {
      if (types[v] != VertexType::Z || v < u) ok = false;
    });
    if (!ok || !cover.contains(closed_neighborhood(g, u))) return false;
  }
  return true;
}

bool check_same_types_and_x_neighbourhoods(const StandardFormResult& r) {
  if (r.types1 != r.types2) return false;
  for (Vertex u = 0; u < r.g1.order(); ++u) {
    if (r.types1[u] == VertexType::X && !(r.g1.neighbors(u) == r.g2.neighbors(u))) return false;
  }
  return true;
}

namespace {

VertexType after_lc_at(VertexType t) {
  if (t == VertexType::Y) return VertexType::Z;
  if (t == VertexType::Z) return VertexType::Y;
  return t;
}
VertexType after_lc_neighbour(VertexType t) {
  if (t == VertexType::X) return VertexType::Y;
  if (t == VertexType::Y) return VertexType::X;
  return t;
}
VertexType after_pivot(VertexType t) {
  if (t == VertexType::X) return VertexType::Z;
  if (t == VertexType::Z) return VertexType::X;
  return t;
}

class Standardizer {
 public:
  Standardizer(const Graph& g1, const Graph& g2, const StandardFormOptions& options)
      : options_(options), g_{g1, g2} {
    result_.w1.source = to_graph6(g1);
    result_.w2.source = to_graph6(g2);
  }

  StandardFormOutcome run() {
    const std::size_t n = g_[0].order();
    if (g_[1].order() != n) throw ValidationError("standardize_pair: order mismatch");
    if (!is_connected(g_[0]) || !is_connected(g_[1])) {
      throw ValidationError("standardize_pair expects connected graphs");
    }
    // Step 1.
    result_.cover = mls_cover(g_[0], options_.caps);
    if (!is_cover_of(g_[1], result_.cover)) {
      return NotEquivalent{"step1", "the minimal local set cover of the first graph is not a cover of the second"};
    }
    refresh_types();
    while (true) {
      steps_2_to_4();
      while (true) {
        step_5();
        step_6();
        auto verdict = step_7();
        if (verdict) return *verdict;
        if (!added_in_step7_) break;
      }
      if (options_.reduce_z_population && reduce_z_population()) continue;
      break;
    }
    return finish();
  }

 private:
  std::size_t measure() const { return type_measure(types_[0]) + type_measure(types_[1]); }

  void refresh_types() {
    types_[0] = vertex_types(g_[0], result_.cover);
    types_[1] = vertex_types(g_[1], result_.cover);
  }

  void record(int step, int gi, LocalOp op, std::size_t before) {
    (gi == 0 ? result_.w1 : result_.w2).ops.push_back(op);
    result_.trace.push_back({step, gi, op, before, measure()});
  }

  void apply_lc(int step, int gi, Vertex u) {
    const std::size_t before = measure();
    std::vector<VertexType> predicted = types_[gi];
    predicted[u] = after_lc_at(predicted[u]);
    g_[gi].neighbors(u).for_each([&](Vertex v) { predicted[v] = after_lc_neighbour(predicted[v]); });
    g_[gi].local_complement_in_place(u);
    types_[gi] = vertex_types(g_[gi], result_.cover);
    if (options_.check_type_tables && predicted != types_[gi]) {
      throw InternalError("type update table violated by local complementation at " + std::to_string(u));
    }
    record(step, gi, LcOp{u}, before);
  }

  void apply_pivot(int step, int gi, Vertex u, Vertex v) {
    const std::size_t before = measure();
    std::vector<VertexType> predicted = types_[gi];
    predicted[u] = after_pivot(predicted[u]);
    predicted[v] = after_pivot(predicted[v]);
    g_[gi].pivot_in_place(u, v);
    types_[gi] = vertex_types(g_[gi], result_.cover);
    if (options_.check_type_tables && predicted != types_[gi]) {
      throw InternalError("type update table violated by pivot on " + std::to_string(u) + "," + std::to_string(v));
    }
    record(step, gi, PivotOp{u, v}, before);
  }

  // Smallest (graph, u, v) over edges u < v with pred(u, v) true.
  template <class Pred>
  std::optional<std::array<Vertex, 3>> find_edge(Pred pred) const {
    for (int gi = 0; gi < 2; ++gi) {
      for (auto [u, v] : g_[gi].edges()) {
        if (pred(gi, u, v)) return std::array<Vertex, 3>{static_cast<Vertex>(gi), u, v};
      }
    }
    return std::nullopt;
  }

  bool is(int gi, Vertex v, VertexType t) const { return types_[gi][v] == t; }

  void steps_2_to_4() {
    while (true) {
      // Step 2.
      while (auto e = find_edge([&](int gi, Vertex u, Vertex v) {
               return is(gi, u, VertexType::X) && is(gi, v, VertexType::X);
             })) {
        apply_pivot(2, static_cast<int>((*e)[0]), (*e)[1], (*e)[2]);
      }
      // Step 3.
      auto xy = find_edge([&](int gi, Vertex u, Vertex v) {
        return (is(gi, u, VertexType::X) && is(gi, v, VertexType::Y)) ||
               (is(gi, u, VertexType::Y) && is(gi, v, VertexType::X));
      });
      if (xy) {
        const int gi = static_cast<int>((*xy)[0]);
        const Vertex x = is(gi, (*xy)[1], VertexType::X) ? (*xy)[1] : (*xy)[2];
        apply_lc(3, gi, x);
        continue;
      }
      // Step 4.
      bool applied = false;
      for (int gi = 0; gi < 2 && !applied; ++gi) {
        for (Vertex u = 0; u < g_[gi].order(); ++u) {
          if (is(gi, u, VertexType::Y)) {
            apply_lc(4, gi, u);
            applied = true;
            break;
          }
        }
      }
      if (!applied) return;
    }
  }

  void check_no_y_no_xx() const {
    for (int gi = 0; gi < 2; ++gi) {
      for (Vertex u = 0; u < g_[gi].order(); ++u) {
        if (is(gi, u, VertexType::Y)) throw InternalError("type Y vertex after step 4");
      }
    }
    if (find_edge([&](int gi, Vertex u, Vertex v) { return is(gi, u, VertexType::X) && is(gi, v, VertexType::X); })) {
      throw InternalError("XX edge after step 2");
    }
  }

  void step_5() {
    while (auto e = find_edge([&](int gi, Vertex u, Vertex v) {
             return (is(gi, u, VertexType::X) && is(gi, v, VertexType::Bottom)) ||
                    (is(gi, u, VertexType::Bottom) && is(gi, v, VertexType::X));
           })) {
      apply_pivot(5, static_cast<int>((*e)[0]), (*e)[1], (*e)[2]);
    }
    check_no_y_no_xx();
  }

  void step_6() {
    // An XZ edge whose Z endpoint precedes the X endpoint.
    while (auto e = find_edge([&](int gi, Vertex u, Vertex v) {
             return is(gi, u, VertexType::Z) && is(gi, v, VertexType::X);
           })) {
      apply_pivot(6, static_cast<int>((*e)[0]), (*e)[2], (*e)[1]);
    }
  }

  // Returns a verdict when the pair is rejected.
  std::optional<NotEquivalent> step_7() {
    added_in_step7_ = false;
    for (int gi = 0; gi < 2; ++gi) {
      for (Vertex u = 0; u < g_[gi].order(); ++u) {
        if (!is(gi, u, VertexType::X)) continue;
        const VertexSet nu = closed_neighborhood(g_[gi], u);
        auto dim = mls_dimension(g_[gi], nu);
        if (dim && *dim == 1) continue;
        for (const VertexSet& m : minimal_local_sets_within(g_[gi], nu, options_.caps)) {
          if (result_.cover.contains(m)) continue;
          if (!mls_dimension_equal(g_[0], g_[1], m)) {
            return NotEquivalent{"step7", "minimal local set " + m.to_string() +
                                              " differs in dimension or minimality between the graphs"};
          }
          MlsCover trial = result_.cover;
          trial.sets.push_back(make_record(g_[0], m, options_.caps));
          auto t0 = vertex_types(g_[0], trial);
          auto t1 = vertex_types(g_[1], trial);
          if (t0 == types_[0] && t1 == types_[1]) continue;
          result_.cover = std::move(trial);
          types_[0] = std::move(t0);
          types_[1] = std::move(t1);
          result_.step7_choices.push_back(m);
          added_in_step7_ = true;
          return std::nullopt;
        }
        throw InternalError("step 7 found no minimal local set changing a type inside " + nu.to_string());
      }
    }
    return std::nullopt;
  }

  bool reduce_z_population() {
    const std::size_t n = g_[0].order();
    VertexSet z;
    for (Vertex u = 0; u < n; ++u) {
      if (is(0, u, VertexType::Z)) z.insert(u);
    }
    if (z.size() <= n / 2 + 1) return false;
    for (const VertexSet& m : minimal_local_sets_within(g_[0], z, options_.caps)) {
      if (result_.cover.contains(m) || !mls_dimension_equal(g_[0], g_[1], m)) continue;
      MlsCover trial = result_.cover;
      trial.sets.push_back(make_record(g_[0], m, options_.caps));
      auto t0 = vertex_types(g_[0], trial);
      if (t0 == types_[0]) continue;
      result_.cover = std::move(trial);
      refresh_types();
      result_.z_pass_choices.push_back(m);
      return true;
    }
    return false;
  }

  StandardFormOutcome finish() {
    // Step 8.
    for (int gi = 0; gi < 2; ++gi) {
      for (Vertex u = 0; u < g_[gi].order(); ++u) {
        if (!is(gi, u, VertexType::X)) continue;
        const VertexSet nu = closed_neighborhood(g_[gi], u);
        if (!result_.cover.contains(nu)) result_.cover.sets.push_back(make_record(g_[gi], nu, options_.caps));
      }
    }
    if (!is_cover_of(g_[0], result_.cover) || !is_cover_of(g_[1], result_.cover)) {
      return NotEquivalent{"step8", "a closed X-neighbourhood is not a minimal local set in both graphs"};
    }
    refresh_types();
    result_.g1 = g_[0];
    result_.g2 = g_[1];
    result_.types1 = types_[0];
    result_.types2 = types_[1];
    result_.w1.target = to_graph6(g_[0]);
    result_.w2.target = to_graph6(g_[1]);
    if (!check_same_types_and_x_neighbourhoods(result_)) {
      return NotEquivalent{"types", "types or X-neighbourhoods differ after standardization"};
    }
    for (int gi = 0; gi < 2; ++gi) {
      if (!is_standard_form(g_[gi], result_.cover, types_[gi])) {
        throw InternalError("standard-form postconditions fail on a type-consistent pair");
      }
      for (auto [u, v] : g_[gi].edges()) {
        const bool xb = (is(gi, u, VertexType::X) && is(gi, v, VertexType::Bottom)) ||
                        (is(gi, v, VertexType::X) && is(gi, u, VertexType::Bottom));
        if (xb) throw InternalError("edge between X and bottom vertices in standard form");
      }
    }
    return std::move(result_);
  }

  StandardFormOptions options_;
  std::array<Graph, 2> g_;
  std::array<std::vector<VertexType>, 2> types_;
  StandardFormResult result_;
  bool added_in_step7_ = false;
};

}  // namespace

StandardFormOutcome standardize_pair(const Graph& g1, const Graph& g2, const StandardFormOptions& options) {
  return Standardizer(g1, g2, options).run();
}

}  // namespace graphlu
