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

// Test-only oracles kept deliberately independent of the library's
// algorithmic paths: plain enumeration wherever possible.

#ifndef RAINBOW_TESTS_SUPPORT_ORACLES_HPP
#define RAINBOW_TESTS_SUPPORT_ORACLES_HPP

#include <functional>
#include <vector>

#include "rainbow/gallai_edmonds.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rainbow_engine.hpp"

namespace rainbow::testing {

// All matchings assembled from the given edges (including the empty one),
// by recursive extension in edge order.
void for_each_matching(const EdgeList& edges,
                       const std::function<void(const Matching&)>& fn);

// Maximum matching size by exhaustive enumeration; no augmenting machinery.
int exhaustive_matching_number(const Graph& g);

// Every matching of g attaining the exhaustive maximum.
std::vector<Matching> all_maximum_matchings(const Graph& g);

// True iff the given edge pool contains a perfect matching of `vertices`.
bool exhaustive_perfect_matching_exists(const EdgeList& pool,
                                        const VertexSet& vertices);

// Enumerates simple f-alternating augmenting paths over the complete graph
// on vertex_count vertices (outside edges unrestricted, matched edges from
// f), up to max_edges edges per path. Paths are reported in discovery
// order; each is reported once per traversal direction.
void for_each_augmenting_path(const Matching& f, int vertex_count,
                              int max_edges,
                              const std::function<void(const AlternatingPath&)>& fn);

// Exact multicolored-path oracle: does some augmenting f-alternating path
// exist whose outside edges are drawn from the family's paths with
// pairwise-distinct colors? Enumerates candidate paths with outside edges
// restricted to the family's pool and checks a system of distinct
// representatives by bipartite matching.
bool multicolored_path_exists(const ColoredPathFamily& family);

// Every decomposition of (g, f) satisfying the structural clauses (Q
// perfectly matched by f, components of g - S hypomatchable with one
// missed vertex each, S matched into distinct roots), canonical or not.
std::vector<GeDecomposition> all_valid_decompositions(const Graph& g,
                                                      const Matching& f);

}  // namespace rainbow::testing

#endif  // RAINBOW_TESTS_SUPPORT_ORACLES_HPP
