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

#include "rainbow/gallai_edmonds.hpp"

#include <algorithm>
#include <stdexcept>

#include "rainbow/errors.hpp"
#include "rainbow/matching.hpp"
#include "rainbow/reach.hpp"

namespace rainbow {

namespace {

std::string vertex_set_to_string(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

// Connected components of the subgraph of g induced on `within`, as sorted
// vertex sets ordered by smallest member.
std::vector<VertexSet> components_within(const Graph& g,
                                         const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet unseen = within;
  while (!unseen.empty()) {
    const int start = *unseen.begin();
    VertexSet comp;
    std::vector<int> stack{start};
    unseen.erase(start);
    comp.insert(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (unseen.count(w)) {
          unseen.erase(w);
          comp.insert(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return *a.begin() < *b.begin();
  });
  return out;
}

}  // namespace

GeDecomposition ge_decompose(const Graph& g, const Matching& f) {
  const int n = g.vertex_count();
  if (!validate_matching(g, f)) {
    throw std::invalid_argument("ge_decompose: f is not a valid matching");
  }
  for (const Edge& e : f.edges()) {
    if (!g.has_edge(e)) {
      throw std::invalid_argument("ge_decompose: f edge " + e.to_string() +
                                  " not in graph");
    }
  }
  const int nu = matching_number(g);
  if (static_cast<int>(f.size()) != nu) {
    throw std::invalid_argument("ge_decompose: f is not maximum (|f|=" +
                                std::to_string(f.size()) + ", nu=" +
                                std::to_string(nu) + ")");
  }

  // R: vertices missed by some maximum matching. Deleting such a vertex
  // does not decrease the matching number.
  VertexSet r_set;
  for (int v = 0; v < n; ++v) {
    if (matching_number(g.without_vertex(v)) == nu) r_set.insert(v);
  }
  VertexSet s_set;
  for (int v : r_set) {
    for (int w : g.neighbors(v)) {
      if (!r_set.count(w)) s_set.insert(w);
    }
  }
  VertexSet q_set;
  for (int v = 0; v < n; ++v) {
    if (!r_set.count(v) && !s_set.count(v)) q_set.insert(v);
  }

  GeDecomposition dec;
  dec.q_set = std::move(q_set);
  dec.s_set = std::move(s_set);

  for (VertexSet& comp : components_within(g, r_set)) {
    int root = -1;
    for (int v : comp) {
      const auto partner = f.partner(v);
      if (!partner || !comp.count(*partner)) {
        if (root != -1) {
          throw ContractViolation(
              "ge_decompose: component " + vertex_set_to_string(comp) +
              " has more than one vertex unmatched within it");
        }
        root = v;
      }
    }
    if (root == -1) {
      throw ContractViolation("ge_decompose: component " +
                              vertex_set_to_string(comp) +
                              " is perfectly matched internally");
    }
    dec.components.push_back(GeComponent{std::move(comp), root});
  }

  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    const int root = dec.components[i].root;
    if (f.covers(root)) {
      dec.j_indices.insert(i);
      dec.s_of.emplace(i, *f.partner(root));
    } else {
      dec.d_indices.insert(i);
    }
  }
  return dec;
}

GeVerification verify_decomposition(const Graph& g, const Matching& f,
                                    const GeDecomposition& dec) {
  GeVerification result;
  auto fail = [&](const std::string& msg) { result.violations.push_back(msg); };

  const int n = g.vertex_count();
  if (!validate_matching(g, f)) {
    fail("f is not a valid matching within the vertex budget");
    return result;
  }

  // Partition check.
  {
    std::vector<int> hits(n, 0);
    for (int v : dec.q_set) {
      if (v < 0 || v >= n) fail("Q contains out-of-range vertex " + std::to_string(v));
      else ++hits[v];
    }
    for (int v : dec.s_set) {
      if (v < 0 || v >= n) fail("S contains out-of-range vertex " + std::to_string(v));
      else ++hits[v];
    }
    for (const GeComponent& c : dec.components) {
      for (int v : c.vertices) {
        if (v < 0 || v >= n) fail("component contains out-of-range vertex " + std::to_string(v));
        else ++hits[v];
      }
    }
    for (int v = 0; v < n; ++v) {
      if (hits[v] != 1) {
        fail("vertex " + std::to_string(v) + " covered " +
             std::to_string(hits[v]) + " times by the partition");
      }
    }
    if (!result.ok()) return result;  // later checks assume a partition
  }

  // F[Q] is a perfect matching of Q.
  {
    VertexSet matched_inside;
    for (const Edge& e : f.edges()) {
      if (dec.q_set.count(e.u) && dec.q_set.count(e.v)) {
        matched_inside.insert(e.u);
        matched_inside.insert(e.v);
      }
    }
    if (matched_inside != dec.q_set) {
      fail("f restricted to Q is not a perfect matching of Q");
    }
  }

  // Components: connected, hypomatchable, closed in g - S, f misses exactly
  // the root inside each.
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    const GeComponent& c = dec.components[i];
    const std::string tag = "component " + std::to_string(i) + " " +
                            vertex_set_to_string(c.vertices);
    if (c.vertices.empty()) {
      fail(tag + " is empty");
      continue;
    }
    if (!c.vertices.count(c.root)) {
      fail(tag + " does not contain its root " + std::to_string(c.root));
      continue;
    }
    for (int v : c.vertices) {
      for (int w : g.neighbors(v)) {
        if (!c.vertices.count(w) && !dec.s_set.count(w)) {
          fail(tag + " has an edge leaving it within g - S (" +
               std::to_string(v) + "-" + std::to_string(w) + ")");
        }
      }
    }
    const Graph induced = g.induced(c.vertices);
    if (components_within(induced, c.vertices).size() != 1) {
      fail(tag + " is not connected");
    }
    // Hypomatchability of the induced subgraph: every vertex deletion
    // leaves a matching covering the remaining component vertices.
    {
      bool hypo = c.vertices.size() % 2 == 1;
      if (hypo) {
        for (int v : c.vertices) {
          const int need = (static_cast<int>(c.vertices.size()) - 1) / 2;
          if (matching_number(induced.without_vertex(v)) != need) {
            hypo = false;
            break;
          }
        }
      }
      if (!hypo) fail(tag + " is not hypomatchable");
    }
    VertexSet missed;
    for (int v : c.vertices) {
      const auto partner = f.partner(v);
      if (!partner || !c.vertices.count(*partner)) missed.insert(v);
    }
    if (missed != VertexSet{c.root}) {
      fail(tag + " is not matched by f except exactly at its root (misses " +
           vertex_set_to_string(missed) + ")");
    }
  }

  // S is matched into distinct roots.
  {
    VertexSet roots_used;
    for (int s : dec.s_set) {
      const auto partner = f.partner(s);
      if (!partner) {
        fail("S vertex " + std::to_string(s) + " is not covered by f");
        continue;
      }
      bool is_root = false;
      for (const GeComponent& c : dec.components) {
        if (c.root == *partner) is_root = true;
      }
      if (!is_root) {
        fail("f(" + std::to_string(s) + ") = " + std::to_string(*partner) +
             " is not a component root");
      } else if (!roots_used.insert(*partner).second) {
        fail("root " + std::to_string(*partner) +
             " is matched to more than one S vertex");
      }
    }
  }

  // D/J split, s_of, and the exposed set being exactly the D roots.
  {
    std::set<std::size_t> expect_d;
    std::set<std::size_t> expect_j;
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
      if (f.covers(dec.components[i].root)) {
        expect_j.insert(i);
      } else {
        expect_d.insert(i);
      }
    }
    if (dec.d_indices != expect_d || dec.j_indices != expect_j) {
      fail("D/J index split disagrees with f");
    }
    for (std::size_t j : dec.j_indices) {
      const auto it = dec.s_of.find(j);
      if (j >= dec.components.size()) continue;
      const auto partner = f.partner(dec.components[j].root);
      if (it == dec.s_of.end() || !partner || it->second != *partner) {
        fail("s_of mismatch at component " + std::to_string(j));
      }
    }
    VertexSet exposed;
    for (int v = 0; v < n; ++v) {
      if (!f.covers(v)) exposed.insert(v);
    }
    VertexSet d_roots;
    for (std::size_t d : dec.d_indices) {
      if (d < dec.components.size()) d_roots.insert(dec.components[d].root);
    }
    if (exposed != d_roots) {
      fail("f-exposed vertices " + vertex_set_to_string(exposed) +
           " differ from D roots " + vertex_set_to_string(d_roots));
    }
  }

  // Reachability identities with K = E(g) \ f. These hold exactly for the
  // canonical (maximal-Q) decomposition; containment alone holds for any
  // valid one.
  {
    const ReachConfig cfg = ReachConfig::make(
        n, f, edge_list_minus(g.edges(), f.edges()));
    const ReachSets sets = reach_global(cfg);
    VertexSet all_components;
    VertexSet odd_expected;
    for (const GeComponent& c : dec.components) {
      for (int v : c.vertices) {
        all_components.insert(v);
        if (v != c.root) odd_expected.insert(v);
      }
    }
    for (int s : dec.s_set) odd_expected.insert(s);
    if (sets.er_set != all_components) {
      fail("even-reach set " + vertex_set_to_string(sets.er_set) +
           " != component union " + vertex_set_to_string(all_components));
    }
    if (sets.or_set != odd_expected) {
      fail("odd-reach set " + vertex_set_to_string(sets.or_set) +
           " != S union rootless components " +
           vertex_set_to_string(odd_expected));
    }
  }

  return result;
}

}  // namespace rainbow
