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

#include "graphlu/witness.hpp"

#include "graphlu/errors.hpp"

namespace graphlu {

void apply_op_in_place(Graph& g, const LocalOp& op) {
  if (const auto* lc = std::get_if<LcOp>(&op)) {
    g.local_complement_in_place(lc->v);
  } else if (const auto* pv = std::get_if<PivotOp>(&op)) {
    g.pivot_in_place(pv->u, pv->v);
  } else {
    g = apply_rlc(g, std::get<RlcOp>(op).s);
  }
}

Graph apply_ops(const Graph& g, const std::vector<LocalOp>& ops) {
  Graph out = g;
  for (const auto& op : ops) apply_op_in_place(out, op);
  return out;
}

std::vector<LocalOp> expand_pivots(const std::vector<LocalOp>& ops) {
  std::vector<LocalOp> out;
  for (const auto& op : ops) {
    if (const auto* pv = std::get_if<PivotOp>(&op)) {
      out.push_back(LcOp{pv->u});
      out.push_back(LcOp{pv->v});
      out.push_back(LcOp{pv->u});
    } else {
      out.push_back(op);
    }
  }
  return out;
}

std::size_t count_rlc(const std::vector<LocalOp>& ops) {
  std::size_t total = 0;
  for (const auto& op : ops) total += std::holds_alternative<RlcOp>(op) ? 1 : 0;
  return total;
}

std::string op_to_string(const LocalOp& op) {
  if (const auto* lc = std::get_if<LcOp>(&op)) return "lc(" + std::to_string(lc->v) + ")";
  if (const auto* pv = std::get_if<PivotOp>(&op)) {
    return "pivot(" + std::to_string(pv->u) + "," + std::to_string(pv->v) + ")";
  }
  return "rlc" + std::get<RlcOp>(op).s.to_string();
}

nlohmann::json op_to_json(const LocalOp& op) {
  if (const auto* lc = std::get_if<LcOp>(&op)) return {{"op", "lc"}, {"v", lc->v}};
  if (const auto* pv = std::get_if<PivotOp>(&op)) return {{"op", "pivot"}, {"u", pv->u}, {"v", pv->v}};
  const auto& s = std::get<RlcOp>(op).s;
  nlohmann::json mult = nlohmann::json::object();
  s.support().for_each([&](Vertex v) { mult[std::to_string(v)] = s.get(v); });
  return {{"op", "rlc"}, {"r", s.level()}, {"mult", mult}};
}

LocalOp op_from_json(const nlohmann::json& j) {
  try {
    const std::string kind = j.at("op").get<std::string>();
    if (kind == "lc") return LcOp{j.at("v").get<Vertex>()};
    if (kind == "pivot") return PivotOp{j.at("u").get<Vertex>(), j.at("v").get<Vertex>()};
    if (kind == "rlc") {
      VertexMultiset s(j.at("r").get<unsigned>());
      for (const auto& [key, value] : j.at("mult").items()) {
        s.set(static_cast<Vertex>(std::stoul(key)), value.get<std::uint64_t>());
      }
      return RlcOp{s};
    }
    throw ParseError("unknown op kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed op: ") + e.what());
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ParseError*>(&e)) throw;
    throw ParseError(std::string("malformed op: ") + e.what());
  }
}

nlohmann::json witness_to_json(const Witness& w) {
  nlohmann::json ops = nlohmann::json::array();
  for (const auto& op : w.ops) ops.push_back(op_to_json(op));
  return {{"source", w.source}, {"target", w.target}, {"ops", ops}};
}

Witness witness_from_json(const nlohmann::json& j) {
  Witness w;
  try {
    if (j.contains("source")) w.source = j.at("source").get<std::string>();
    if (j.contains("target")) w.target = j.at("target").get<std::string>();
    for (const auto& op : j.at("ops")) w.ops.push_back(op_from_json(op));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed witness: ") + e.what());
  }
  return w;
}

}  // namespace graphlu
