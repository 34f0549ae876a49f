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

#ifndef RAINBOW_RAINBOW_ENGINE_HPP
#define RAINBOW_RAINBOW_ENGINE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// A matching f together with color-tagged augmenting f-alternating paths.
struct ColoredPath {
  AlternatingPath path;
  int color = 0;
};

struct ColoredPathFamily {
  int vertex_count = 0;
  Matching f;
  std::vector<ColoredPath> paths;  // distinct colors, each path augmenting
};

// An augmenting alternating path whose outside edges carry pairwise
// distinct colors, each edge drawn from the tagged path of its color.
// edge_colors[i] is the color of the path's i-th outside-labeled edge.
struct MulticoloredPath {
  AlternatingPath path;
  std::vector<int> edge_colors;
};

// Builds a multicolored augmenting path by growing an edge set one
// enriching edge per colored path until the odd-reach set escapes the
// matched vertices, then extracting the augmenting path it certifies.
//
// With more than 2|f| paths this always succeeds; exhausting the family in
// that regime means a guaranteed-success argument failed, and the function
// throws ContractViolation. With at most 2|f| paths success is not
// guaranteed and absence is reported as nullopt. Invalid families
// (non-augmenting paths, repeated colors) throw std::invalid_argument.
std::optional<MulticoloredPath> multicolored_augmenting_path(
    const ColoredPathFamily& family);

// Per-iteration record of the growth loop, for tests and debugging.
struct RainbowTraceStep {
  std::size_t size_before = 0;
  std::vector<int> colors_offered;  // the unrepresented colors tried
  std::vector<int> colors_used;     // colors on the multicolored path
};

// Builds a rainbow matching of size min(n, floor((m+2)/3)) from a family of
// m matchings, each of size at least n; with m >= 3n-2 the result has size
// exactly n. Matchings larger than n are truncated to their first n edges
// in canonical order. Greedy seeding first, then one augmentation per
// round: each round takes the 2k+1 lowest unrepresented colors, derives one
// augmenting path per color, and applies the multicolored path to grow the
// matching by exactly one edge using only fresh colors.
//
// Throws std::invalid_argument if some matching has size < n, and
// ContractViolation if a round that must succeed cannot (either too few
// unrepresented colors below the guarantee, or the multicolored search
// fails with its precondition met).
RainbowMatching rainbow_matching(const ColoredFamily& family, int n,
                                 std::vector<RainbowTraceStep>* trace = nullptr);

// Guarantee floor for m colors: min(n, floor((m + 2) / 3)).
int rainbow_guarantee_floor(int n, int m);

// Search-space caps for the exact backtracking oracle.
struct BruteForceLimits {
  std::size_t max_total_edges = 512;
  int max_target = 16;
};

// Exact oracle: a rainbow matching of size >= target if one exists,
// nullopt otherwise. Backtracking over colors in order of increasing
// matching size with disjointness and remaining-colors pruning. Refuses
// instances above the limits.
std::optional<RainbowMatching> brute_force_rainbow(
    const ColoredFamily& family, int target, BruteForceLimits limits = {});

// Maximizing variant: a rainbow matching of maximum size.
RainbowMatching brute_force_rainbow_max(const ColoredFamily& family,
                                        BruteForceLimits limits = {});

// True iff rm assigns to each of its colors an edge of that color's
// matching and the assigned edges are pairwise disjoint.
bool verify_rainbow(const ColoredFamily& family, const RainbowMatching& rm);

}  // namespace rainbow

#endif  // RAINBOW_RAINBOW_ENGINE_HPP
