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

#ifndef RAINBOW_GRAPH_HPP
#define RAINBOW_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rainbow {

// Vertices are dense 0-based ints. Graphs and families carry an explicit
// vertex count so isolated vertices are representable.

// An undirected edge, stored with u < v so that sorted edge vectors compare
// structurally. Self-loops are rejected at construction.
struct Edge {
  int u;
  int v;

  Edge(int a, int b);
  auto operator<=>(const Edge&) const = default;

  bool meets(int vertex) const { return u == vertex || v == vertex; }
  bool shares_vertex(const Edge& other) const {
    return meets(other.u) || meets(other.v);
  }
  // The endpoint that is not `vertex`; `vertex` must be an endpoint.
  int other(int vertex) const { return vertex == u ? v : u; }

  std::string to_string() const;
};

using EdgeList = std::vector<Edge>;
using VertexSet = std::set<int>;

// Sorted-unique edge vector helpers. All persistent edge collections in this
// library are kept canonical (sorted ascending, no duplicates).
EdgeList canonical_edges(EdgeList edges);
bool edge_list_contains(const EdgeList& sorted, const Edge& e);
EdgeList edge_list_union(const EdgeList& a, const EdgeList& b);
EdgeList edge_list_minus(const EdgeList& a, const EdgeList& b);
bool edge_lists_disjoint(const EdgeList& a, const EdgeList& b);

// Simple undirected graph: a vertex count plus a canonical edge list.
// Immutable after construction; duplicate input edges are collapsed.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, EdgeList edges);

  int vertex_count() const { return vertex_count_; }
  const EdgeList& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(const Edge& e) const { return edge_list_contains(edges_, e); }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }

  // The same vertex set with every edge incident to `v` removed. A matching
  // of the result covering all vertices but `v` is exactly a matching of
  // the vertex-deleted graph, which saves relabeling throughout.
  Graph without_vertex(int v) const;

  Graph induced(const VertexSet& keep) const;  // keeps original vertex ids
  Graph with_extra_edge(const Edge& e) const;

  bool operator==(const Graph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

 private:
  int vertex_count_ = 0;
  EdgeList edges_;
  std::vector<std::vector<int>> adjacency_;
};

// A set of edges intended to be pairwise vertex-disjoint. Disjointness is
// deliberately not enforced at construction: validate_matching is the
// predicate, and several call sites need to hold candidate edge sets that
// may fail it. Operations that require a valid matching check and throw.
class Matching {
 public:
  Matching() = default;
  explicit Matching(EdgeList edges) : edges_(canonical_edges(std::move(edges))) {}

  const EdgeList& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(const Edge& e) const { return edge_list_contains(edges_, e); }

  bool covers(int v) const;
  // J(v): the partner of v, when v is covered.
  std::optional<int> partner(int v) const;
  VertexSet covered_vertices() const;

  // Pairwise vertex-disjoint, ignoring any vertex budget.
  bool is_disjoint() const;

  Matching with_edge(const Edge& e) const;
  Matching without_edge(const Edge& e) const;

  bool operator==(const Matching&) const = default;
  auto operator<=>(const Matching&) const = default;

 private:
  EdgeList edges_;
};

// True iff m's edges are pairwise disjoint and all endpoints lie in
// [0, vertex_budget).
bool validate_matching(int vertex_budget, const Matching& m);
bool validate_matching(const Graph& g, const Matching& m);

// An ordered sequence of matchings; the position in the sequence is the
// color. Matchings may repeat verbatim.
struct ColoredFamily {
  int vertex_count = 0;
  std::vector<Matching> matchings;

  std::size_t color_count() const { return matchings.size(); }
  bool operator==(const ColoredFamily&) const = default;
};

// Labels for the edges of an alternating path. kOutside marks edges drawn
// from outside the path's matching (the K side of a K-F alternating path);
// kMatched marks edges of the matching itself.
enum class EdgeLabel { kOutside, kMatched };

// A vertex sequence with one label per consecutive pair. Labels are stored
// explicitly rather than inferred, because augmenting paths routinely use
// edges that belong to no graph at hand.
struct AlternatingPath {
  std::vector<int> vertices;
  std::vector<EdgeLabel> labels;

  static AlternatingPath single_vertex(int v) { return {{v}, {}}; }

  std::size_t edge_count() const { return labels.size(); }
  Edge edge(std::size_t i) const { return Edge(vertices[i], vertices[i + 1]); }
  int first() const { return vertices.front(); }
  int last() const { return vertices.back(); }

  EdgeList labeled_edges(EdgeLabel which) const;

  // Structural sanity: vertex/label counts line up, vertices pairwise
  // distinct, labels strictly alternate. Says nothing about any matching.
  bool is_well_formed() const;

  AlternatingPath reversed() const;

  bool operator==(const AlternatingPath&) const = default;

  std::string to_string() const;
};

// True iff p is simple, its labels strictly alternate starting with
// kOutside, every kOutside edge lies in `outside`, and every kMatched edge
// lies in f. Throws if f and `outside` are not disjoint edge sets.
bool validate_alternating_path(const AlternatingPath& p, const Matching& f,
                               const EdgeList& outside);

// True iff p is a valid f-alternating augmenting path: well-formed, labels
// alternate starting and ending with kOutside, matched-labeled edges belong
// to f, outside-labeled edges do not, and both endpoints are f-exposed.
bool is_augmenting_path(const AlternatingPath& p, const Matching& f);

// E(p) symmetric-difference f for an augmenting path p: drops f's edges on
// the path and adds the path's outside edges, yielding a matching of size
// |f| + 1. Throws std::invalid_argument if p is not augmenting for f.
Matching symmetric_difference(const Matching& f, const AlternatingPath& p);

// A partial assignment of one edge to each of a set of colors. Map keys are
// the colors, so color distinctness is structural.
struct RainbowMatching {
  std::map<int, Edge> assignment;

  std::size_t size() const { return assignment.size(); }
  Matching as_matching() const;

  bool operator==(const RainbowMatching&) const = default;
};

}  // namespace rainbow

#endif  // RAINBOW_GRAPH_HPP
