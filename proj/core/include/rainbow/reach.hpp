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

#ifndef RAINBOW_REACH_HPP
#define RAINBOW_REACH_HPP

#include <map>
#include <optional>

#include "rainbow/graph.hpp"

namespace rainbow {

// A matching f plus an edge set k disjoint from it, over a fixed vertex
// budget. The arena for K-F alternating reachability: paths alternate
// k-edges and f-edges, starting with a k-edge.
struct ReachConfig {
  int vertex_count = 0;
  Matching f;
  EdgeList k;  // canonical, disjoint from f

  static ReachConfig make(int vertex_count, Matching f, EdgeList k);
};

// Reachability result. A vertex is oddly reachable if some simple
// alternating path from a source ends at it with a k-edge, evenly reachable
// if some such path ends with an f-edge. Membership is defined over simple
// paths only. Witnesses record the first discovered path per vertex and
// parity; they exist to make failures debuggable.
struct ReachSets {
  VertexSet or_set;
  VertexSet er_set;
  VertexSet dr_set;  // or_set intersect er_set, maintained by construction
  std::map<int, AlternatingPath> odd_witness;
  std::map<int, AlternatingPath> even_witness;

  bool sets_equal(const ReachSets& other) const {
    return or_set == other.or_set && er_set == other.er_set &&
           dr_set == other.dr_set;
  }
};

// Single-source reachability from vertex a. The source may be covered or
// exposed; a itself is never a member of the returned sets (a positive
// simple path cannot return to its own start).
//
// Implementation: reduction to matchability. With a free source, a vertex
// v covered by f is evenly reachable iff the graph (k union f) induced on
// (covered(f) union {a}) minus v has a perfect matching; v is oddly
// reachable iff its partner is evenly reachable; a free vertex v != a is
// oddly reachable iff (k union f) induced on covered(f) union {a, v} has a
// perfect matching. A covered source reduces to the free case by deleting
// its matching edge: no simple alternating path from a can use that edge or
// pass through the partner. Each test is one blossom call, so the function
// is polynomial and comfortably handles arenas far beyond the brute-force
// bound.
ReachSets reach_from(int a, const ReachConfig& cfg);

// Union of reach_from over all f-exposed sources, plus every exposed vertex
// as a zero-length member of er_set.
ReachSets reach_global(const ReachConfig& cfg);

// Ground-truth oracle: depth-first enumeration of every simple alternating
// path from a. Exponential; refuses vertex counts above `bound`.
inline constexpr int kDefaultReachOracleBound = 12;
ReachSets brute_force_reach(int a, const ReachConfig& cfg,
                            int bound = kDefaultReachOracleBound);

// A simple K-F alternating path with both endpoints f-exposed, iff one
// exists. Such a path exists iff the odd-reach set escapes the covered set,
// equivalently iff f is not maximum in (V, f union k).
std::optional<AlternatingPath> find_kf_augmenting_path(const ReachConfig& cfg);

// Hypomatchability test routed through reachability: take a = 0, a matching
// J covering everything except a (false if none exists), K = E(g) \ J, and
// check that every other vertex is evenly reachable from a.
bool hypomatchable_via_reach(const Graph& g);

}  // namespace rainbow

#endif  // RAINBOW_REACH_HPP
