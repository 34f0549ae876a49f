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

#include "rainbow/matching.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

// Edmonds' blossom algorithm, O(V^3). Grows an alternating tree from each
// free root in turn; odd cycles are contracted implicitly by remapping
// vertices to the base of their blossom.
class BlossomSolver {
 public:
  explicit BlossomSolver(const Graph& g)
      : g_(g),
        n_(g.vertex_count()),
        match_(n_, -1),
        parent_(n_, -1),
        base_(n_, 0) {}

  Matching solve() {
    for (int root = 0; root < n_; ++root) {
      if (match_[root] == -1) {
        try_augment(root);
      }
    }
    EdgeList edges;
    for (int v = 0; v < n_; ++v) {
      if (match_[v] > v) edges.push_back(Edge(v, match_[v]));
    }
    return Matching(std::move(edges));
  }

 private:
  // Lowest common ancestor of a and b in the alternating tree, walking
  // through blossom bases.
  int lca(int a, int b) {
    std::vector<bool> on_path(n_, false);
    int x = a;
    while (true) {
      x = base_[x];
      on_path[x] = true;
      if (match_[x] == -1) break;
      x = parent_[match_[x]];
    }
    int y = b;
    while (true) {
      y = base_[y];
      if (on_path[y]) return y;
      y = parent_[match_[y]];
    }
  }

  void mark_blossom_path(int v, int b, int child, std::vector<bool>& in_blossom) {
    while (base_[v] != b) {
      in_blossom[base_[v]] = true;
      in_blossom[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  void contract(int v, int u, std::queue<int>& bfs, std::vector<bool>& used) {
    const int b = lca(v, u);
    std::vector<bool> in_blossom(n_, false);
    mark_blossom_path(v, b, u, in_blossom);
    mark_blossom_path(u, b, v, in_blossom);
    for (int i = 0; i < n_; ++i) {
      if (in_blossom[base_[i]]) {
        base_[i] = b;
        if (!used[i]) {
          used[i] = true;
          bfs.push(i);
        }
      }
    }
  }

  bool try_augment(int root) {
    std::vector<bool> used(n_, false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;

    std::queue<int> bfs;
    bfs.push(root);
    used[root] = true;

    while (!bfs.empty()) {
      const int v = bfs.front();
      bfs.pop();
      for (int u : g_.neighbors(v)) {
        if (base_[v] == base_[u] || match_[v] == u) continue;
        if (u == root || (match_[u] != -1 && parent_[match_[u]] != -1)) {
          // Both endpoints are even vertices of the tree: odd cycle.
          contract(v, u, bfs, used);
        } else if (parent_[u] == -1) {
          parent_[u] = v;
          if (match_[u] == -1) {
            augment_along(u);
            return true;
          }
          used[match_[u]] = true;
          bfs.push(match_[u]);
        }
      }
    }
    return false;
  }

  void augment_along(int u) {
    while (u != -1) {
      const int pv = parent_[u];
      const int next = match_[pv];
      match_[u] = pv;
      match_[pv] = u;
      u = next;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
};

}  // namespace

Matching maximum_matching(const Graph& g) { return BlossomSolver(g).solve(); }

int matching_number(const Graph& g) {
  return static_cast<int>(maximum_matching(g).size());
}

bool has_perfect_matching(const Graph& g) {
  return 2 * matching_number(g) == g.vertex_count();
}

bool is_hypomatchable(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  if (n % 2 == 0) return false;
  for (int v = 0; v < n; ++v) {
    // A matching of size (n-1)/2 avoiding v is a perfect matching of g - v.
    if (matching_number(g.without_vertex(v)) != (n - 1) / 2) return false;
  }
  return true;
}

Matching near_perfect_matching(const Graph& g, int exposed) {
  const int n = g.vertex_count();
  if (exposed < 0 || exposed >= n) {
    throw std::invalid_argument("near_perfect_matching: vertex out of range");
  }
  if (n % 2 == 0) {
    throw std::invalid_argument(
        "near_perfect_matching: even vertex count admits no near-perfect "
        "matching");
  }
  Matching m = maximum_matching(g.without_vertex(exposed));
  if (static_cast<int>(m.size()) != (n - 1) / 2) {
    throw std::invalid_argument(
        "near_perfect_matching: no matching covers all vertices except " +
        std::to_string(exposed));
  }
  return m;
}

AlternatingPath find_augmenting_path(const Matching& f, const Matching& m) {
  if (!f.is_disjoint() || !m.is_disjoint()) {
    throw std::invalid_argument("find_augmenting_path: inputs must be matchings");
  }
  if (m.size() <= f.size()) {
    throw std::invalid_argument(
        "find_augmenting_path: second matching must be strictly larger");
  }

  // Work on the symmetric difference. Shared edges form digon components in
  // the multigraph view and can never lie on an augmenting component.
  const EdgeList m_only = edge_list_minus(m.edges(), f.edges());
  const EdgeList f_only = edge_list_minus(f.edges(), m.edges());

  int max_vertex = -1;
  for (const Edge& e : m_only) max_vertex = std::max(max_vertex, e.v);
  for (const Edge& e : f_only) max_vertex = std::max(max_vertex, e.v);
  const int n = max_vertex + 1;

  std::vector<int> m_partner(n, -1);
  std::vector<int> f_partner(n, -1);
  for (const Edge& e : m_only) {
    m_partner[e.u] = e.v;
    m_partner[e.v] = e.u;
  }
  for (const Edge& e : f_only) {
    f_partner[e.u] = e.v;
    f_partner[e.v] = e.u;
  }

  // An augmenting component is a path whose two end-edges both come from m.
  // Scan candidate starts in ascending order: a start is an f-exposed vertex
  // with an m-edge in the difference.
  for (int start = 0; start < n; ++start) {
    if (m_partner[start] == -1 || f.covers(start)) continue;
    AlternatingPath path;
    path.vertices.push_back(start);
    int current = start;
    bool take_m = true;
    while (true) {
      const int next = take_m ? m_partner[current] : f_partner[current];
      if (next == -1) break;
      path.vertices.push_back(next);
      path.labels.push_back(take_m ? EdgeLabel::kOutside : EdgeLabel::kMatched);
      current = next;
      take_m = !take_m;
    }
    if (path.labels.size() % 2 == 1) {
      return path;  // ends on an m-edge, so both endpoints are f-exposed
    }
  }
  throw ContractViolation(
      "find_augmenting_path: |m| > |f| but no augmenting component exists");
}

}  // namespace rainbow
