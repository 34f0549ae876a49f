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

#ifndef RAINBOW_GENERATORS_HPP
#define RAINBOW_GENERATORS_HPP

#include "rainbow/graph.hpp"
#include "rainbow/rainbow_engine.hpp"

namespace rainbow {

// Cycle on vertices 0..k-1 with edges {i, i+1 mod k}; requires k >= 3.
Graph cycle_graph(int k);

// The tight family on the 2n-cycle: n-1 copies of the even-start perfect
// matching followed by n-1 copies of the odd-start one. 2n-2 matchings of
// size n with no rainbow matching of size n. Requires n >= 2.
ColoredFamily two_matchings_family(int n);

// True iff the chord {i, j} of an even cycle of length cycle_len lies in
// some perfect matching of the cycle plus that chord; this holds exactly
// when j - i is odd. A chord of even length traps an odd number of vertices
// on each side. Requires even cycle_len, i != j, both in range.
bool chord_extends_to_perfect(int cycle_len, int i, int j);

// A perfect matching of the 2n-cycle's vertex set in which every pair has
// even index difference: consecutive pairs of even-indexed vertices
// (0-2, 4-6, ...) plus consecutive pairs of odd-indexed ones (1-3, 5-7,
// ...). Such a matching exists iff n is even (the index sums of a perfect
// pairing add up to an odd total when n is odd); throws on odd n.
Matching even_chords_matching(int n);

// two_matchings_family(n) plus even_chords_matching(n) as a final color:
// 2n-1 matchings of size n, still without a rainbow matching of size n,
// because an even chord cannot complete to a perfect matching using cycle
// edges. Requires even n.
ColoredFamily drisko_plus_even_family(int n);

// The sharpness family for the multicolored-path bound: a matching f of
// size k on the inner vertices of a path layout with two exposed ends, and
// 2k colored augmenting paths -- k copies of the straight traversal and k
// copies of the zigzag traversal. Each traversal carries k+1 outside edges
// but only k colors are available per traversal type, so no multicolored
// augmenting path exists; adding any one extra copy (2k+1 paths) makes the
// construction succeed.
//
// Layout on 2k+2 vertices: exposed ends 0 and 2k+1, f = {{2i-1, 2i}} for
// i = 1..k. Straight path: 0-1-2-...-2k+1. Zigzag path:
// 0-2-1-4-3-...-2k-(2k-1)-(2k+1). Requires k >= 2.
ColoredPathFamily sharpness_paths(int k);

}  // namespace rainbow

#endif  // RAINBOW_GENERATORS_HPP
