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

#include "rainbow/reach.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/matching.hpp"

namespace rainbow {

namespace {

void check_config(const ReachConfig& cfg) {
  if (!validate_matching(cfg.vertex_count, cfg.f)) {
    throw std::invalid_argument("reach: f is not a matching within budget");
  }
  for (const Edge& e : cfg.k) {
    if (e.v >= cfg.vertex_count) {
      throw std::invalid_argument("reach: k edge " + e.to_string() +
                                  " out of range");
    }
  }
  if (!edge_lists_disjoint(cfg.f.edges(), cfg.k)) {
    throw std::invalid_argument("reach: f and k intersect");
  }
}

void insert_reached(ReachSets& sets, int v, bool odd,
                    const AlternatingPath& witness) {
  auto& set = odd ? sets.or_set : sets.er_set;
  auto& witnesses = odd ? sets.odd_witness : sets.even_witness;
  if (set.insert(v).second) {
    witnesses.emplace(v, witness);
  }
  if (sets.or_set.count(v) && sets.er_set.count(v)) sets.dr_set.insert(v);
}

// Walks the path component of (m symmetric-difference f) that starts at
// `from`, which must be m-covered and f-exposed. Edges from m get the
// outside label, edges from f the matched label.
AlternatingPath walk_difference_path(int n, const Matching& f,
                                     const Matching& m, int from) {
  std::vector<int> m_partner(n, -1);
  std::vector<int> f_partner(n, -1);
  for (const Edge& e : edge_list_minus(m.edges(), f.edges())) {
    m_partner[e.u] = e.v;
    m_partner[e.v] = e.u;
  }
  for (const Edge& e : edge_list_minus(f.edges(), m.edges())) {
    f_partner[e.u] = e.v;
    f_partner[e.v] = e.u;
  }
  AlternatingPath path;
  path.vertices.push_back(from);
  int current = from;
  bool take_m = true;
  while (true) {
    const int next = take_m ? m_partner[current] : f_partner[current];
    if (next == -1) break;
    path.vertices.push_back(next);
    path.labels.push_back(take_m ? EdgeLabel::kOutside : EdgeLabel::kMatched);
    current = next;
    take_m = !take_m;
  }
  return path;
}

}  // namespace

ReachConfig ReachConfig::make(int vertex_count, Matching f, EdgeList k) {
  ReachConfig cfg{vertex_count, std::move(f), canonical_edges(std::move(k))};
  check_config(cfg);
  return cfg;
}

ReachSets reach_from(int a, const ReachConfig& cfg) {
  check_config(cfg);
  if (a < 0 || a >= cfg.vertex_count) {
    throw std::invalid_argument("reach_from: source out of range");
  }

  // A covered source reduces to a free one: no simple alternating path from
  // a can traverse a's matching edge, and the partner remains reachable only
  // as a final odd vertex, which the reduced instance also exhibits.
  Matching f = cfg.f;
  if (auto partner = f.partner(a)) {
    f = f.without_edge(Edge(a, *partner));
  }

  const int n = cfg.vertex_count;
  const Graph arena(n, edge_list_union(cfg.k, f.edges()));
  const VertexSet covered = f.covered_vertices();

  ReachSets sets;

  // Even side: v (covered) is evenly reachable iff the arena induced on
  // (covered + a - v) is perfectly matchable; the witness path is the
  // a-component of that matching's difference with f.
  for (int v : covered) {
    VertexSet keep = covered;
    keep.insert(a);
    keep.erase(v);
    const Graph sub = arena.induced(keep);
    const Matching m = maximum_matching(sub);
    if (2 * m.size() != keep.size()) continue;
    insert_reached(sets, v, /*odd=*/false, walk_difference_path(n, f, m, a));
  }

  // Odd side, covered vertices: an odd path to v extends to an even path to
  // its partner and vice versa (the partner cannot lie elsewhere on a simple
  // witness), so truncate the partner's even witness by one edge.
  for (int v : covered) {
    const int partner = *f.partner(v);
    auto it = sets.even_witness.find(partner);
    if (it == sets.even_witness.end()) continue;
    AlternatingPath odd = it->second;
    odd.vertices.pop_back();
    odd.labels.pop_back();
    insert_reached(sets, v, /*odd=*/true, odd);
  }

  // Odd side, free vertices: an odd path from a to a free v is exactly an
  // augmenting component, i.e. the arena induced on covered + {a, v} has a
  // perfect matching.
  for (int v = 0; v < n; ++v) {
    if (v == a || covered.count(v)) continue;
    VertexSet keep = covered;
    keep.insert(a);
    keep.insert(v);
    const Graph sub = arena.induced(keep);
    const Matching m = maximum_matching(sub);
    if (2 * m.size() != keep.size()) continue;
    insert_reached(sets, v, /*odd=*/true, walk_difference_path(n, f, m, a));
  }

  return sets;
}

ReachSets reach_global(const ReachConfig& cfg) {
  check_config(cfg);
  ReachSets sets;
  for (int a = 0; a < cfg.vertex_count; ++a) {
    if (cfg.f.covers(a)) continue;
    // Zero-length path: every exposed vertex is evenly reachable from itself.
    insert_reached(sets, a, /*odd=*/false, AlternatingPath::single_vertex(a));
    const ReachSets from_a = reach_from(a, cfg);
    for (int v : from_a.or_set) {
      insert_reached(sets, v, /*odd=*/true, from_a.odd_witness.at(v));
    }
    for (int v : from_a.er_set) {
      insert_reached(sets, v, /*odd=*/false, from_a.even_witness.at(v));
    }
  }
  return sets;
}

ReachSets brute_force_reach(int a, const ReachConfig& cfg, int bound) {
  check_config(cfg);
  if (cfg.vertex_count > bound) {
    throw std::invalid_argument(
        "brute_force_reach: vertex count " + std::to_string(cfg.vertex_count) +
        " exceeds oracle bound " + std::to_string(bound));
  }
  if (a < 0 || a >= cfg.vertex_count) {
    throw std::invalid_argument("brute_force_reach: source out of range");
  }

  const int n = cfg.vertex_count;
  std::vector<std::vector<int>> k_adj(n);
  for (const Edge& e : cfg.k) {
    k_adj[e.u].push_back(e.v);
    k_adj[e.v].push_back(e.u);
  }
  for (auto& nbrs : k_adj) std::sort(nbrs.begin(), nbrs.end());

  ReachSets sets;
  AlternatingPath path;
  path.vertices.push_back(a);
  std::vector<bool> on_path(n, false);
  on_path[a] = true;

  // DFS over simple alternating paths. After a k-step the f-continuation is
  // forced (unique partner), so only k-steps branch.
  auto extend = [&](auto&& self, int v, bool need_k) -> void {
    if (need_k) {
      for (int w : k_adj[v]) {
        if (on_path[w]) continue;
        path.vertices.push_back(w);
        path.labels.push_back(EdgeLabel::kOutside);
        on_path[w] = true;
        insert_reached(sets, w, /*odd=*/true, path);
        self(self, w, false);
        on_path[w] = false;
        path.vertices.pop_back();
        path.labels.pop_back();
      }
    } else {
      const auto partner = cfg.f.partner(v);
      if (partner && !on_path[*partner]) {
        const int w = *partner;
        path.vertices.push_back(w);
        path.labels.push_back(EdgeLabel::kMatched);
        on_path[w] = true;
        insert_reached(sets, w, /*odd=*/false, path);
        self(self, w, true);
        on_path[w] = false;
        path.vertices.pop_back();
        path.labels.pop_back();
      }
    }
  };
  extend(extend, a, true);
  return sets;
}

std::optional<AlternatingPath> find_kf_augmenting_path(const ReachConfig& cfg) {
  check_config(cfg);
  const Graph arena(cfg.vertex_count, edge_list_union(cfg.k, cfg.f.edges()));
  const Matching best = maximum_matching(arena);
  if (best.size() <= cfg.f.size()) return std::nullopt;
  return find_augmenting_path(cfg.f, best);
}

bool hypomatchable_via_reach(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) {
    throw std::invalid_argument("hypomatchable_via_reach: empty graph");
  }
  if (n == 1) return true;
  const int a = 0;
  Matching near;
  try {
    near = near_perfect_matching(g, a);
  } catch (const std::invalid_argument&) {
    return false;
  }
  const ReachConfig cfg = ReachConfig::make(
      n, near, edge_list_minus(g.edges(), near.edges()));
  const ReachSets sets = reach_from(a, cfg);
  // Every vertex other than a must be evenly reachable; a itself counts via
  // the zero-length convention.
  return static_cast<int>(sets.er_set.size()) == n - 1;
}

}  // namespace rainbow
