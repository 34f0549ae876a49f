// Copyright 2026 The Rainbow Authors.
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

// Command-line surface over the rainbow-matching library.
//
// Exit codes, shared by every subcommand:
//   0  success / target met / property verified
//   1  internal contract violation (a guaranteed step failed; never expected)
//   2  target not met, but the guaranteed floor was met / verification negative
//   3  input or configuration error

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "rainbow/enrichment.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/gallai_edmonds.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/io.hpp"
#include "rainbow/matching.hpp"
#include "rainbow/rainbow_engine.hpp"
#include "rainbow/reach.hpp"
#include "rainbow/sweep.hpp"

namespace {

using namespace rainbow;

constexpr int kExitSuccess = 0;
constexpr int kExitContractViolation = 1;
constexpr int kExitTargetMissed = 2;
constexpr int kExitInputError = 3;

std::string vertex_set_text(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

nlohmann::json vertex_set_json(const VertexSet& s) {
  nlohmann::json out = nlohmann::json::array();
  for (int v : s) out.push_back(v);
  return out;
}

int run_solve(const std::string& input, int n, bool oracle, bool json) {
  const ColoredFamily family = parse_family(read_text_file(input));
  const RainbowMatching rm = rainbow_matching(family, n);
  const bool verified = verify_rainbow(family, rm);
  if (!verified) {
    throw ContractViolation("solver output failed verification");
  }

  std::optional<bool> oracle_feasible;
  if (oracle) {
    oracle_feasible = brute_force_rainbow(family, n).has_value();
  }

  if (json) {
    nlohmann::json j;
    j["target"] = n;
    j["size"] = rm.size();
    j["verified"] = verified;
    nlohmann::json assignment = nlohmann::json::object();
    for (const auto& [color, edge] : rm.assignment) {
      assignment[std::to_string(color)] = edge.to_string();
    }
    j["assignment"] = assignment;
    if (oracle_feasible) j["oracle_target_feasible"] = *oracle_feasible;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "size: " << rm.size() << " (target " << n << ")\n";
    for (const auto& [color, edge] : rm.assignment) {
      std::cout << color << ": " << edge.to_string() << "\n";
    }
    std::cout << "verification: " << (verified ? "ok" : "FAILED") << "\n";
    if (oracle_feasible) {
      std::cout << "oracle: size-" << n << " rainbow "
                << (*oracle_feasible ? "exists" : "does not exist") << "\n";
    }
  }

  if (static_cast<int>(rm.size()) >= n) return kExitSuccess;
  if (static_cast<int>(rm.size()) >=
      rainbow_guarantee_floor(n, static_cast<int>(family.color_count()))) {
    return kExitTargetMissed;
  }
  throw ContractViolation("solver returned less than the guaranteed floor");
}

int run_sweep_command(const SweepConfig& cfg, bool json) {
  const SweepReport report = run_sweep(cfg);
  std::cout << (json ? report.to_json() : report.to_text());
  return kExitSuccess;
}

int run_generate(const std::string& kind, int n, int k,
                 const std::string& out_path) {
  if (kind == "two-matchings") {
    write_text_file(out_path, serialize_family(two_matchings_family(n)));
  } else if (kind == "drisko-plus-even") {
    write_text_file(out_path, serialize_family(drisko_plus_even_family(n)));
  } else if (kind == "sharpness") {
    const ColoredPathFamily family = sharpness_paths(k);
    std::string text =
        "vertices " + std::to_string(family.vertex_count) + "\n";
    text += "fmatching:";
    for (const Edge& e : family.f.edges()) text += " " + e.to_string();
    text += "\n";
    for (const ColoredPath& cp : family.paths) {
      text += "path " + std::to_string(cp.color) + ":";
      for (int v : cp.path.vertices) text += " " + std::to_string(v);
      text += "\n";
    }
    write_text_file(out_path, text);
  } else {
    throw std::invalid_argument("unknown generator '" + kind + "'");
  }
  std::cout << "wrote " << out_path << "\n";
  return kExitSuccess;
}

int run_decompose(const std::string& input, bool json) {
  const Graph g = parse_graph(read_text_file(input));
  const Matching f = maximum_matching(g);
  const GeDecomposition dec = ge_decompose(g, f);
  const GeVerification verdict = verify_decomposition(g, f, dec);

  if (json) {
    nlohmann::json j;
    j["nu"] = f.size();
    nlohmann::json matching = nlohmann::json::array();
    for (const Edge& e : f.edges()) matching.push_back(e.to_string());
    j["matching"] = matching;
    j["q"] = vertex_set_json(dec.q_set);
    j["s"] = vertex_set_json(dec.s_set);
    j["components"] = nlohmann::json::array();
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
      nlohmann::json c;
      c["vertices"] = vertex_set_json(dec.components[i].vertices);
      c["root"] = dec.components[i].root;
      c["kind"] = dec.d_indices.count(i) ? "D" : "J";
      if (dec.j_indices.count(i)) c["s"] = dec.s_of.at(i);
      j["components"].push_back(c);
    }
    j["verified"] = verdict.ok();
    j["violations"] = verdict.violations;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "nu: " << f.size() << "\n";
    std::cout << "matching:";
    for (const Edge& e : f.edges()) std::cout << " " << e.to_string();
    std::cout << "\n";
    std::cout << "Q: " << vertex_set_text(dec.q_set) << "\n";
    std::cout << "S: " << vertex_set_text(dec.s_set) << "\n";
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
      std::cout << "component " << i << ": "
                << vertex_set_text(dec.components[i].vertices) << " root "
                << dec.components[i].root;
      if (dec.j_indices.count(i)) {
        std::cout << " (J, s=" << dec.s_of.at(i) << ")";
      } else {
        std::cout << " (D, exposed)";
      }
      std::cout << "\n";
    }
    std::cout << "verdict: " << (verdict.ok() ? "ok" : "INVALID") << "\n";
    for (const std::string& violation : verdict.violations) {
      std::cout << "  violation: " << violation << "\n";
    }
  }
  if (!verdict.ok()) {
    throw ContractViolation("canonical decomposition failed verification");
  }
  return kExitSuccess;
}

int run_reach(const std::string& input, const std::string& matching_edges,
              const std::string& k_edges, bool k_given, int from,
              bool from_given, bool json) {
  const Graph g = parse_graph(read_text_file(input));
  const Matching f(parse_edge_tokens(matching_edges, g.vertex_count()));
  EdgeList k;
  if (k_given) {
    k = parse_edge_tokens(k_edges, g.vertex_count());
  } else {
    k = edge_list_minus(g.edges(), f.edges());
  }
  const ReachConfig cfg = ReachConfig::make(g.vertex_count(), f, k);
  const ReachSets sets =
      from_given ? reach_from(from, cfg) : reach_global(cfg);

  if (json) {
    nlohmann::json j;
    j["or"] = vertex_set_json(sets.or_set);
    j["er"] = vertex_set_json(sets.er_set);
    j["dr"] = vertex_set_json(sets.dr_set);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "or: " << vertex_set_text(sets.or_set) << "\n";
    std::cout << "er: " << vertex_set_text(sets.er_set) << "\n";
    std::cout << "dr: " << vertex_set_text(sets.dr_set) << "\n";
  }
  return kExitSuccess;
}

int run_verify(const std::string& input, const std::string& assignment_text,
               bool json) {
  const ColoredFamily family = parse_family(read_text_file(input));
  RainbowMatching rm;
  std::istringstream in(assignment_text);
  std::string token;
  while (in >> token) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
      throw ParseError(0, "assignment token '" + token +
                              "' is not of the form color:u-v");
    }
    int color = 0;
    try {
      color = std::stoi(token.substr(0, colon));
    } catch (const std::exception&) {
      throw ParseError(0, "bad color in token '" + token + "'");
    }
    const EdgeList edges =
        parse_edge_tokens(token.substr(colon + 1), family.vertex_count);
    if (edges.size() != 1) {
      throw ParseError(0, "token '" + token + "' must name exactly one edge");
    }
    if (!rm.assignment.emplace(color, edges.front()).second) {
      throw ParseError(0, "color " + std::to_string(color) + " repeated");
    }
  }
  const bool ok = verify_rainbow(family, rm);
  if (json) {
    nlohmann::json j;
    j["valid"] = ok;
    j["size"] = rm.size();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (ok ? "valid" : "invalid") << " (size " << rm.size()
              << ")\n";
  }
  return ok ? kExitSuccess : kExitTargetMissed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rainbow matchings from families of matchings"};
  app.require_subcommand(1);

  // solve
  std::string solve_input;
  int solve_n = 1;
  bool solve_oracle = false;
  bool solve_json = false;
  auto* solve = app.add_subcommand(
      "solve", "find a rainbow matching of the target size in a family file");
  solve->add_option("--input", solve_input, "family file")->required();
  solve->add_option("--n", solve_n, "target rainbow size")->required();
  solve->add_flag("--oracle", solve_oracle,
                  "cross-check feasibility with the exact oracle");
  solve->add_flag("--json", solve_json, "machine-readable output");

  // sweep
  SweepConfig sweep_cfg;
  bool sweep_json = false;
  auto* sweep = app.add_subcommand(
      "sweep", "randomized or exhaustive conformance / counterexample hunt");
  sweep->add_option("--n", sweep_cfg.n, "target rainbow size")->required();
  sweep->add_option("--m", sweep_cfg.m, "family size (ignored with --conjecture)");
  sweep->add_option("--trials", sweep_cfg.trials, "random instances to run");
  sweep->add_option("--seed", sweep_cfg.seed, "sweep seed");
  sweep->add_option("--vertex-budget", sweep_cfg.vertex_budget,
                    "vertices available to random instances");
  sweep->add_flag("--conjecture", sweep_cfg.conjecture_mode,
                  "m = 2n (even n) or 2n-1 (odd n), decided by the oracle");
  sweep->add_flag("--exhaustive", sweep_cfg.exhaustive,
                  "enumerate all families within the caps");
  sweep->add_flag("--oracle", sweep_cfg.oracle_check,
                  "cross-check the solver against the oracle");
  sweep->add_option("--threads", sweep_cfg.threads,
                    "worker threads (0 = hardware)");
  sweep->add_flag("--json", sweep_json, "machine-readable report");

  // generate
  std::string gen_kind;
  int gen_n = 2;
  int gen_k = 2;
  std::string gen_out;
  auto* generate = app.add_subcommand(
      "generate", "write one of the extremal constructions to a file");
  generate->add_option("kind", gen_kind,
                       "two-matchings | drisko-plus-even | sharpness")
      ->required();
  generate->add_option("--n", gen_n, "matching size for family generators");
  generate->add_option("--k", gen_k, "matching size for sharpness paths");
  generate->add_option("--out", gen_out, "output file")->required();

  // decompose
  std::string dec_input;
  bool dec_json = false;
  auto* decompose = app.add_subcommand(
      "decompose", "canonical decomposition of a graph file");
  decompose->add_option("--input", dec_input, "graph file")->required();
  decompose->add_flag("--json", dec_json, "machine-readable output");

  // reach
  std::string reach_input;
  std::string reach_matching;
  std::string reach_k;
  int reach_from_vertex = 0;
  bool reach_json = false;
  auto* reach = app.add_subcommand(
      "reach", "alternating reachability sets over a graph file");
  reach->add_option("--input", reach_input, "graph file")->required();
  auto* matching_opt =
      reach->add_option("--matching-edges", reach_matching,
                        "matching edges, e.g. \"0-1 2-3\"");
  matching_opt->required();
  auto* k_opt = reach->add_option(
      "--k-edges", reach_k, "outside edges (default: graph minus matching)");
  auto* from_opt = reach->add_option("--from", reach_from_vertex,
                                     "single source (default: global)");
  reach->add_flag("--json", reach_json, "machine-readable output");

  // verify
  std::string verify_input;
  std::string verify_assignment;
  bool verify_json = false;
  auto* verify = app.add_subcommand(
      "verify", "check a color:edge assignment against a family file");
  verify->add_option("--input", verify_input, "family file")->required();
  verify
      ->add_option("--assignment", verify_assignment,
                   "space-separated color:u-v tokens")
      ->required();
  verify->add_flag("--json", verify_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (solve->parsed()) {
      return run_solve(solve_input, solve_n, solve_oracle, solve_json);
    }
    if (sweep->parsed()) {
      return run_sweep_command(sweep_cfg, sweep_json);
    }
    if (generate->parsed()) {
      return run_generate(gen_kind, gen_n, gen_k, gen_out);
    }
    if (decompose->parsed()) {
      return run_decompose(dec_input, dec_json);
    }
    if (reach->parsed()) {
      return run_reach(reach_input, reach_matching, reach_k,
                       k_opt->count() > 0, reach_from_vertex,
                       from_opt->count() > 0, reach_json);
    }
    if (verify->parsed()) {
      return run_verify(verify_input, verify_assignment, verify_json);
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return kExitContractViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContractViolation;
  }
  return kExitSuccess;
}
