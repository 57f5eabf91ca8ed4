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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphlu/bouchet.hpp"
#include "graphlu/equivalence.hpp"
#include "graphlu/errors.hpp"
#include "graphlu/graph6.hpp"
#include "graphlu/local_sets.hpp"
#include "graphlu/orbit.hpp"
#include "graphlu/search_gk.hpp"
#include "graphlu/standard_form.hpp"
#include "graphlu/witness.hpp"

namespace graphlu::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A path to a graph6 file, or a graph6 string.
Graph read_graph(const std::string& arg) {
  std::string text = std::filesystem::is_regular_file(arg) ? read_file(arg) : arg;
  const std::string header = ">>graph6<<";
  if (text.rfind(header, 0) == 0) text.erase(0, header.size());
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }),
               line.end());
    if (!line.empty()) return from_graph6(line);
  }
  throw ParseError("no graph6 data in " + arg);
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << j.dump(2) << '\n';
}

// "0,2,5", "{0,2,5}" or "" for the empty set.
VertexSet parse_set(std::string text, std::size_t n) {
  text.erase(std::remove_if(text.begin(), text.end(),
                            [](unsigned char c) { return c == '{' || c == '}' || std::isspace(c); }),
             text.end());
  VertexSet out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad vertex '" + item + "'");
    }
    if (pos != item.size() || v >= n) throw ParseError("bad vertex '" + item + "'");
    out.insert(static_cast<Vertex>(v));
  }
  return out;
}

std::string components_text(const Graph& g) {
  std::string s;
  for (const VertexSet& c : connected_components(g)) s += (s.empty() ? "" : " ") + c.to_string();
  return s;
}

void require_connected(const Graph& g1, const Graph& g2) {
  for (const Graph* g : {&g1, &g2}) {
    if (!is_connected(*g)) {
      throw ValidationError("disconnected input; components: " + components_text(*g) +
                            ". Equivalent graphs have identical component vertex sets; compare each component "
                            "separately (induced subgraphs) or use --mode lc");
    }
  }
}

json decision_json(const Decision& d, const std::string& mode) {
  json j;
  j["mode"] = mode;
  j["equivalent"] = d.equivalent;
  j["level"] = d.level;
  if (!d.equivalent) {
    j["stage"] = d.stage;
    j["reason"] = d.reason;
  }
  if (d.witness) {
    j["witness"] = witness_to_json(*d.witness);
    j["rlc_count"] = count_rlc(d.witness->ops);
  }
  return j;
}

void emit(std::ostream& out, const json& j, const std::string& format, const std::string& text) {
  if (format == "text") {
    out << text << '\n';
  } else {
    out << j.dump(2) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local-Clifford, level-r and local-unitary equivalence of graph states", "graphlu"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  // check
  auto* check = app.add_subcommand("check", "Decide equivalence of two graphs");
  std::string mode = "lu", g1_arg, g2_arg, witness_path, constraints_path;
  unsigned level = 0;
  std::size_t max_generator_size = LocalSetCaps{}.max_generator_size;
  check->add_option("--mode", mode, "lc, lcr or lu")->check(CLI::IsMember({"lc", "lcr", "lu"}));
  check->add_option("--level", level, "Level r for --mode lcr")->check(CLI::Range(1u, kMaxLevel));
  check->add_option("G1", g1_arg)->required();
  check->add_option("G2", g2_arg)->required();
  check->add_option("--witness", witness_path, "Write the witness JSON here");
  check->add_option("--constraints", constraints_path, "Constraint JSON (--mode lc only)");
  check->add_option("--max-generator-size", max_generator_size, "Cover search cap")->check(CLI::Range(1, 64));

  // apply
  auto* apply = app.add_subcommand("apply", "Apply a witness or op list to a graph");
  std::string g_arg, ops_path;
  apply->add_option("G", g_arg)->required();
  apply->add_option("OPS", ops_path, "Witness JSON or a JSON list of ops")->required();

  // mls-cover
  auto* cover_cmd = app.add_subcommand("mls-cover", "Minimal local set cover of a graph");
  cover_cmd->add_option("G", g_arg)->required();
  cover_cmd->add_option("--max-generator-size", max_generator_size)->check(CLI::Range(1, 64));

  // standard-form
  auto* sf_cmd = app.add_subcommand("standard-form", "Put a pair of graphs in standard form");
  sf_cmd->add_option("G1", g1_arg)->required();
  sf_cmd->add_option("G2", g2_arg)->required();
  sf_cmd->add_option("--max-generator-size", max_generator_size)->check(CLI::Range(1, 64));

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "Brute-force LC or LC_r orbit");
  std::string allowed_arg;
  bool list_members = false;
  std::size_t orbit_cap = 0;
  unsigned orbit_level = 1;
  orbit_cmd->add_option("G", g_arg)->required();
  orbit_cmd->add_option("--level", orbit_level)->check(CLI::Range(1u, kMaxLevel));
  auto* allowed_opt = orbit_cmd->add_option("--allowed", allowed_arg, "Vertices allowed for LC, e.g. 0,2,5");
  orbit_cmd->add_flag("--members", list_members, "List members as graph6");
  orbit_cmd->add_option("--cap", orbit_cap, "Largest order accepted");

  // search-gk
  auto* gk_cmd = app.add_subcommand("search-gk", "Scan the G_k class");
  GkScanOptions gk;
  std::size_t max_support = 0;
  std::string certificate_path, report_path;
  gk_cmd->add_option("--k", gk.k)->required()->check(CLI::Range(1u, 64u));
  auto* max_support_opt = gk_cmd->add_option("--max-support", max_support);
  gk_cmd->add_option("--jobs", gk.jobs)->check(CLI::Range(1u, 1024u));
  gk_cmd->add_option("--checkpoint", gk.checkpoint);
  gk_cmd->add_option("--max-dump", gk.max_dump);
  gk_cmd->add_option("--certificate", certificate_path, "Write the identity certificate here");
  gk_cmd->add_option("--report", report_path, "Also write the report here");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Replay a witness with full validation");
  std::string witness_arg;
  verify_cmd->add_option("G1", g1_arg)->required();
  verify_cmd->add_option("WITNESS", witness_arg)->required();
  verify_cmd->add_option("G2", g2_arg)->required();

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Operating level and bound table for an order");
  std::size_t bound_n = 0;
  bounds_cmd->add_option("--n", bound_n)->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 30));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    LocalSetCaps caps;
    caps.max_generator_size = max_generator_size;
    DecideOptions decide_options;
    decide_options.standard_form.caps = caps;

    if (check->parsed()) {
      const Graph g1 = read_graph(g1_arg);
      const Graph g2 = read_graph(g2_arg);
      if (g1.order() != g2.order()) throw ValidationError("graphs have different orders");
      if (level != 0 && mode != "lcr") throw ValidationError("--level applies to --mode lcr only");
      if (!constraints_path.empty() && mode != "lc") throw ValidationError("--constraints applies to --mode lc only");
      Decision d;
      if (mode == "lc") {
        ConstraintSet c(g1.order());
        if (!constraints_path.empty()) c = constraints_from_json(read_json(constraints_path), g1.order());
        d = decide_lc_pair(g1, g2, c);
      } else {
        require_connected(g1, g2);
        if (mode == "lcr") {
          if (level == 0) throw ValidationError("--mode lcr needs --level");
          d = decide_lcr(g1, g2, level, decide_options);
        } else {
          d = decide_lu(g1, g2, decide_options);
        }
      }
      if (d.witness && !witness_path.empty()) write_json_file(witness_path, witness_to_json(*d.witness));
      std::string text = d.equivalent ? "YES" : "NO (" + d.stage + ": " + d.reason + ")";
      if (d.witness) {
        for (const LocalOp& op : d.witness->ops) text += "\n" + op_to_string(op);
      }
      emit(out, decision_json(d, mode), format, text);
      return d.equivalent ? kEquivalent : kNotEquivalent;
    }

    if (apply->parsed()) {
      const Graph g = read_graph(g_arg);
      const json j = read_json(ops_path);
      std::vector<LocalOp> ops;
      if (j.is_array()) {
        for (const auto& o : j) ops.push_back(op_from_json(o));
      } else {
        const Witness w = witness_from_json(j);
        if (!w.source.empty() && w.source != to_graph6(g)) throw ValidationError("witness source differs from G");
        ops = w.ops;
      }
      const std::string result = to_graph6(apply_ops(g, ops));
      emit(out, json{{"graph6", result}}, format, result);
      return kEquivalent;
    }

    if (cover_cmd->parsed()) {
      const Graph g = read_graph(g_arg);
      const MlsCover cover = mls_cover(g, caps);
      const std::string types = types_to_string(vertex_types(g, cover));
      json j = cover_to_json(cover);
      j["types"] = types;
      std::string text;
      for (const auto& rec : cover.sets) text += rec.set.to_string() + " dim " + std::to_string(rec.dimension) + "\n";
      emit(out, j, format, text + types);
      return kEquivalent;
    }

    if (sf_cmd->parsed()) {
      const Graph g1 = read_graph(g1_arg);
      const Graph g2 = read_graph(g2_arg);
      if (g1.order() != g2.order()) throw ValidationError("graphs have different orders");
      require_connected(g1, g2);
      StandardFormOptions options;
      options.caps = caps;
      const StandardFormOutcome outcome = standardize_pair(g1, g2, options);
      if (const auto* ne = std::get_if<NotEquivalent>(&outcome)) {
        emit(out, json{{"equivalent", false}, {"stage", ne->stage}, {"reason", ne->reason}}, format,
             "NO (" + ne->stage + ": " + ne->reason + ")");
        return kNotEquivalent;
      }
      const auto& r = std::get<StandardFormResult>(outcome);
      json j{{"g1", to_graph6(r.g1)},
             {"g2", to_graph6(r.g2)},
             {"cover", cover_to_json(r.cover)},
             {"types1", types_to_string(r.types1)},
             {"types2", types_to_string(r.types2)},
             {"w1", witness_to_json(r.w1)},
             {"w2", witness_to_json(r.w2)},
             {"same_types_and_x_neighbourhoods", check_same_types_and_x_neighbourhoods(r)}};
      emit(out, j, format,
           to_graph6(r.g1) + " " + types_to_string(r.types1) + "\n" + to_graph6(r.g2) + " " +
               types_to_string(r.types2));
      return kEquivalent;
    }

    if (orbit_cmd->parsed()) {
      const Graph g = read_graph(g_arg);
      OrbitIndex index;
      if (orbit_level == 1) {
        OrbitOptions options;
        if (orbit_cap) options.max_order = orbit_cap;
        std::optional<VertexSet> allowed;
        if (allowed_opt->count()) allowed = parse_set(allowed_arg, g.order());
        index = lc_orbit(g, allowed, options);
      } else {
        if (allowed_opt->count()) throw ValidationError("--allowed applies to --level 1 only");
        LcrOrbitOptions options;
        if (orbit_cap) options.base.max_order = orbit_cap;
        index = lcr_orbit_small(g, orbit_level, options);
      }
      json j{{"size", index.size()}, {"level", orbit_level}};
      std::string text = std::to_string(index.size());
      if (list_members) {
        json members = json::array();
        for (std::size_t i = 0; i < index.size(); ++i) {
          members.push_back(index.digest(i));
          text += "\n" + index.digest(i);
        }
        j["members"] = members;
      }
      emit(out, j, format, text);
      return kEquivalent;
    }

    if (gk_cmd->parsed()) {
      if (max_support_opt->count()) gk.max_support = max_support;
      const GkReport report = scan_gk(gk);
      const json j = report_to_json(report);
      if (!report_path.empty()) write_json_file(report_path, j);
      if (!certificate_path.empty()) write_json_file(certificate_path, gk_certificate(report));
      std::string text = "visited " + std::to_string(report.visited) + ": identity " +
                         std::to_string(report.counts[0]) + ", lc_implementable " + std::to_string(report.counts[1]) +
                         ", counterexample " + std::to_string(report.counts[2]);
      emit(out, j, format, text);
      return kEquivalent;
    }

    if (verify_cmd->parsed()) {
      const Graph g1 = read_graph(g1_arg);
      const Graph g2 = read_graph(g2_arg);
      const Witness w = witness_from_json(read_json(witness_arg));
      const bool ok = verify_witness(g1, w, g2);
      emit(out, json{{"valid", ok}, {"rlc_count", count_rlc(w.ops)}}, format, ok ? "VALID" : "INVALID");
      return ok ? kEquivalent : kNotEquivalent;
    }

    if (bounds_cmd->parsed()) {
      const unsigned r_max = max_useful_level(bound_n);
      json table = json::array();
      std::string text = "n=" + std::to_string(bound_n) + " level " + std::to_string(r_max);
      for (unsigned r = 2; r <= r_max + 1; ++r) {
        const std::size_t order_min = std::size_t{1} << (r + 2);
        table.push_back({{"r", r},
                         {"min_genuine_support", min_genuine_support(r)},
                         {"min_complement", r + 3},
                         {"min_order", order_min},
                         {"lu_equals_lcr_up_to", (std::size_t{1} << (r + 3)) - 1}});
        text += "\nr=" + std::to_string(r) + " |supp|>=" + std::to_string(min_genuine_support(r)) +
                " |V-supp|>=" + std::to_string(r + 3) + " n>=" + std::to_string(order_min);
      }
      emit(out, json{{"n", bound_n}, {"max_useful_level", r_max}, {"table", table}}, format, text);
      return kEquivalent;
    }
  } catch (const ClassAlphaUnresolved& e) {
    err << "class alpha unresolved: " << e.what() << '\n';
    return kClassAlpha;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "file error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace graphlu::cli
