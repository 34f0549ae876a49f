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

#include "rainbow/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rainbow {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) {
    throw std::invalid_argument("self-loop edge " + std::to_string(a) + "-" +
                                std::to_string(b));
  }
  if (a < 0 || b < 0) {
    throw std::invalid_argument("negative vertex in edge");
  }
}

std::string Edge::to_string() const {
  return std::to_string(u) + "-" + std::to_string(v);
}

EdgeList canonical_edges(EdgeList edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

bool edge_list_contains(const EdgeList& sorted, const Edge& e) {
  return std::binary_search(sorted.begin(), sorted.end(), e);
}

EdgeList edge_list_union(const EdgeList& a, const EdgeList& b) {
  EdgeList out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

EdgeList edge_list_minus(const EdgeList& a, const EdgeList& b) {
  EdgeList out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool edge_lists_disjoint(const EdgeList& a, const EdgeList& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return false;
    if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return true;
}

Graph::Graph(int vertex_count, EdgeList edges)
    : vertex_count_(vertex_count), edges_(canonical_edges(std::move(edges))) {
  if (vertex_count_ < 0) {
    throw std::invalid_argument("negative vertex count");
  }
  for (const Edge& e : edges_) {
    if (e.v >= vertex_count_) {
      throw std::invalid_argument("edge " + e.to_string() +
                                  " exceeds vertex count " +
                                  std::to_string(vertex_count_));
    }
  }
  adjacency_.assign(vertex_count_, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::without_vertex(int v) const {
  EdgeList kept;
  kept.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (!e.meets(v)) kept.push_back(e);
  }
  return Graph(vertex_count_, std::move(kept));
}

Graph Graph::induced(const VertexSet& keep) const {
  EdgeList kept;
  for (const Edge& e : edges_) {
    if (keep.count(e.u) && keep.count(e.v)) kept.push_back(e);
  }
  return Graph(vertex_count_, std::move(kept));
}

Graph Graph::with_extra_edge(const Edge& e) const {
  EdgeList extended = edges_;
  extended.push_back(e);
  return Graph(vertex_count_, std::move(extended));
}

bool Matching::covers(int v) const {
  for (const Edge& e : edges_) {
    if (e.meets(v)) return true;
  }
  return false;
}

std::optional<int> Matching::partner(int v) const {
  for (const Edge& e : edges_) {
    if (e.meets(v)) return e.other(v);
  }
  return std::nullopt;
}

VertexSet Matching::covered_vertices() const {
  VertexSet out;
  for (const Edge& e : edges_) {
    out.insert(e.u);
    out.insert(e.v);
  }
  return out;
}

bool Matching::is_disjoint() const {
  VertexSet seen;
  for (const Edge& e : edges_) {
    if (!seen.insert(e.u).second) return false;
    if (!seen.insert(e.v).second) return false;
  }
  return true;
}

Matching Matching::with_edge(const Edge& e) const {
  EdgeList edges = edges_;
  edges.push_back(e);
  return Matching(std::move(edges));
}

Matching Matching::without_edge(const Edge& e) const {
  EdgeList edges;
  edges.reserve(edges_.size());
  for (const Edge& f : edges_) {
    if (!(f == e)) edges.push_back(f);
  }
  return Matching(std::move(edges));
}

bool validate_matching(int vertex_budget, const Matching& m) {
  if (!m.is_disjoint()) return false;
  for (const Edge& e : m.edges()) {
    if (e.v >= vertex_budget) return false;
  }
  return true;
}

bool validate_matching(const Graph& g, const Matching& m) {
  return validate_matching(g.vertex_count(), m);
}

EdgeList AlternatingPath::labeled_edges(EdgeLabel which) const {
  EdgeList out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == which) out.push_back(edge(i));
  }
  return canonical_edges(std::move(out));
}

bool AlternatingPath::is_well_formed() const {
  if (vertices.empty()) return false;
  if (labels.size() + 1 != vertices.size()) return false;
  std::set<int> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size()) return false;
  for (int v : vertices) {
    if (v < 0) return false;
  }
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] == labels[i - 1]) return false;
  }
  return true;
}

AlternatingPath AlternatingPath::reversed() const {
  AlternatingPath out;
  out.vertices.assign(vertices.rbegin(), vertices.rend());
  out.labels.assign(labels.rbegin(), labels.rend());
  return out;
}

std::string AlternatingPath::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out += std::to_string(vertices[i]);
    if (i < labels.size()) {
      out += labels[i] == EdgeLabel::kOutside ? " -K- " : " -F- ";
    }
  }
  return out;
}

bool validate_alternating_path(const AlternatingPath& p, const Matching& f,
                               const EdgeList& outside) {
  if (!edge_lists_disjoint(f.edges(), outside)) {
    throw std::invalid_argument(
        "validate_alternating_path: matching and outside edge set intersect");
  }
  if (!p.is_well_formed()) return false;
  if (!p.labels.empty() && p.labels.front() != EdgeLabel::kOutside) {
    return false;
  }
  for (std::size_t i = 0; i < p.labels.size(); ++i) {
    const Edge e = p.edge(i);
    if (p.labels[i] == EdgeLabel::kOutside) {
      if (!edge_list_contains(outside, e)) return false;
    } else {
      if (!f.contains(e)) return false;
    }
  }
  return true;
}

bool is_augmenting_path(const AlternatingPath& p, const Matching& f) {
  if (!p.is_well_formed()) return false;
  if (p.labels.empty()) return false;
  if (p.labels.front() != EdgeLabel::kOutside) return false;
  if (p.labels.back() != EdgeLabel::kOutside) return false;
  for (std::size_t i = 0; i < p.labels.size(); ++i) {
    const Edge e = p.edge(i);
    const bool in_f = f.contains(e);
    if (p.labels[i] == EdgeLabel::kMatched && !in_f) return false;
    if (p.labels[i] == EdgeLabel::kOutside && in_f) return false;
  }
  if (f.covers(p.first()) || f.covers(p.last())) return false;
  return true;
}

Matching symmetric_difference(const Matching& f, const AlternatingPath& p) {
  if (!is_augmenting_path(p, f)) {
    throw std::invalid_argument(
        "symmetric_difference: path is not augmenting for the matching");
  }
  EdgeList result = edge_list_minus(f.edges(), p.labeled_edges(EdgeLabel::kMatched));
  for (const Edge& e : p.labeled_edges(EdgeLabel::kOutside)) {
    result.push_back(e);
  }
  return Matching(std::move(result));
}

Matching RainbowMatching::as_matching() const {
  EdgeList edges;
  edges.reserve(assignment.size());
  for (const auto& [color, edge] : assignment) edges.push_back(edge);
  return Matching(std::move(edges));
}

}  // namespace rainbow
