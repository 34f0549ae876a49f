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

#ifndef RAINBOW_MATCHING_HPP
#define RAINBOW_MATCHING_HPP

#include "rainbow/graph.hpp"

namespace rainbow {

// Exact maximum-cardinality matching via Edmonds' blossom algorithm.
//
// Deterministic: augmentation roots are scanned in ascending vertex order,
// adjacency lists are ascending, and the BFS queue is FIFO, so the returned
// matching is the algorithm's natural output under that fixed order. The
// same input always yields the same matching.
Matching maximum_matching(const Graph& g);

// Matching number nu(g) = |maximum_matching(g)|.
int matching_number(const Graph& g);

bool has_perfect_matching(const Graph& g);

// True iff g - v has a perfect matching for every vertex v. The empty graph
// is vacuously hypomatchable; a single vertex is hypomatchable.
bool is_hypomatchable(const Graph& g);

// A matching covering every vertex of g except `exposed`. Throws
// std::invalid_argument when no such matching exists (in particular when
// the vertex count is even).
Matching near_perfect_matching(const Graph& g, int exposed);

// Given valid matchings with |m| > |f|, returns a simple f-alternating
// augmenting path inside f union m whose outside-labeled edges come from
// m \ f. The components of f union m are alternating paths and cycles;
// the first path component (scanning start vertices in ascending order)
// with more m-edges than f-edges is returned. Throws on |m| <= |f| or
// invalid inputs.
AlternatingPath find_augmenting_path(const Matching& f, const Matching& m);

}  // namespace rainbow

#endif  // RAINBOW_MATCHING_HPP
