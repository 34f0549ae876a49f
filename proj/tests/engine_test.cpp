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

#include "rainbow/rainbow_engine.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rainbow/errors.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/sweep.hpp"
#include "support/oracles.hpp"

using namespace rainbow;
using namespace rainbow::testing;

namespace {

AlternatingPath odd_path(std::vector<int> vertices) {
  AlternatingPath p;
  p.vertices = std::move(vertices);
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    p.labels.push_back(i % 2 == 0 ? EdgeLabel::kOutside : EdgeLabel::kMatched);
  }
  return p;
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("multicolored path from a single edge") {
  ColoredPathFamily family;
  family.vertex_count = 2;
  family.paths.push_back(ColoredPath{odd_path({0, 1}), 0});
  const auto result = multicolored_augmenting_path(family);
  REQUIRE(result.has_value());
  CHECK(result->path.vertices == std::vector<int>{0, 1});
  CHECK(result->edge_colors == std::vector<int>{0});
}

TEST_CASE("multicolored path over three copies of one swap") {
  ColoredPathFamily family;
  family.vertex_count = 4;
  family.f = Matching({Edge(1, 2)});
  family.paths.push_back(ColoredPath{odd_path({0, 1, 2, 3}), 0});
  family.paths.push_back(ColoredPath{odd_path({0, 1, 2, 3}), 1});
  family.paths.push_back(ColoredPath{odd_path({0, 1, 2, 3}).reversed(), 2});
  const auto result = multicolored_augmenting_path(family);
  REQUIRE(result.has_value());
  CHECK(is_augmenting_path(result->path, family.f));
  // Colors on the outside edges are pairwise distinct and each edge belongs
  // to the path of its color.
  std::set<int> seen;
  std::size_t outside = 0;
  for (std::size_t i = 0; i < result->path.labels.size(); ++i) {
    if (result->path.labels[i] != EdgeLabel::kOutside) continue;
    const int color = result->edge_colors[outside++];
    CHECK(seen.insert(color).second);
    const auto& donor = family.paths[static_cast<std::size_t>(color)].path;
    CHECK(edge_list_contains(donor.labeled_edges(EdgeLabel::kOutside),
                             result->path.edge(i)));
  }
  // Oracle agrees something multicolored exists.
  CHECK(multicolored_path_exists(family));
}

TEST_CASE("family validation") {
  ColoredPathFamily family;
  family.vertex_count = 4;
  family.f = Matching({Edge(1, 2)});
  family.paths.push_back(ColoredPath{odd_path({0, 1, 2, 3}), 0});
  family.paths.push_back(ColoredPath{odd_path({0, 1, 2, 3}), 0});
  CHECK_THROWS_AS(multicolored_augmenting_path(family),
                  std::invalid_argument);

  family.paths[1].color = 1;
  AlternatingPath not_augmenting;
  not_augmenting.vertices = {0, 1};
  not_augmenting.labels = {EdgeLabel::kMatched};
  family.paths[1].path = not_augmenting;
  CHECK_THROWS_AS(multicolored_augmenting_path(family),
                  std::invalid_argument);
}

TEST_CASE("rainbow matching on the smallest instance") {
  ColoredFamily family;
  family.vertex_count = 2;
  family.matchings.push_back(Matching({Edge(0, 1)}));
  const RainbowMatching rm = rainbow_matching(family, 1);
  CHECK(rm.size() == 1);
  CHECK(rm.assignment.at(0) == Edge(0, 1));
  CHECK(verify_rainbow(family, rm));
}

TEST_CASE("rainbow matching on four cycle matchings") {
  ColoredFamily family;
  family.vertex_count = 4;
  const Matching horizontal({Edge(0, 1), Edge(2, 3)});
  const Matching vertical({Edge(1, 2), Edge(0, 3)});
  family.matchings = {horizontal, horizontal, vertical, vertical};
  const RainbowMatching rm = rainbow_matching(family, 2);
  CHECK(rm.size() == 2);
  CHECK(verify_rainbow(family, rm));
  CHECK(brute_force_rainbow(family, 2).has_value());
}

TEST_CASE("rainbow matching stalls at the guarantee on the tight family") {
  const ColoredFamily family = two_matchings_family(2);
  const RainbowMatching rm = rainbow_matching(family, 2);
  CHECK(rm.size() == 1);  // floor((2 + 2) / 3) = 1
  CHECK(verify_rainbow(family, rm));
  CHECK_FALSE(brute_force_rainbow(family, 2).has_value());
}

TEST_CASE("rainbow matching rejects undersized inputs") {
  ColoredFamily family;
  family.vertex_count = 4;
  family.matchings.push_back(Matching({Edge(0, 1)}));
  CHECK_THROWS_AS(rainbow_matching(family, 2), std::invalid_argument);
  CHECK_THROWS_AS(rainbow_matching(family, 0), std::invalid_argument);
}

TEST_CASE("oversized matchings are truncated, not rejected") {
  ColoredFamily family;
  family.vertex_count = 8;
  family.matchings.push_back(
      Matching({Edge(0, 1), Edge(2, 3), Edge(4, 5), Edge(6, 7)}));
  const RainbowMatching rm = rainbow_matching(family, 1);
  CHECK(rm.size() == 1);
  CHECK(verify_rainbow(family, rm));
}

TEST_CASE("growth loop uses fresh colors and grows by one") {
  // 3n - 2 = 7 matchings of size 3 engineered so that the greedy seed
  // stalls: colors 0..2 identical, colors 3..6 identical but shifted.
  const ColoredFamily family = [] {
    ColoredFamily f;
    f.vertex_count = 6;
    const Matching a({Edge(0, 1), Edge(2, 3), Edge(4, 5)});
    const Matching b({Edge(1, 2), Edge(3, 4), Edge(0, 5)});
    f.matchings = {a, a, a, b, b, b, b};
    return f;
  }();
  std::vector<RainbowTraceStep> trace;
  const RainbowMatching rm = rainbow_matching(family, 3, &trace);
  CHECK(rm.size() == 3);
  CHECK(verify_rainbow(family, rm));
  std::size_t expected = 0;
  std::set<int> represented;
  for (const auto& [color, edge] : rm.assignment) represented.insert(color);
  for (const RainbowTraceStep& step : trace) {
    CHECK(step.size_before >= expected);
    expected = step.size_before + 1;
    for (int c : step.colors_used) {
      // A color spent in a step was among the unrepresented colors offered.
      CHECK(std::find(step.colors_offered.begin(), step.colors_offered.end(),
                      c) != step.colors_offered.end());
    }
  }
}

TEST_CASE("brute force oracle on the extremal families") {
  CHECK_FALSE(brute_force_rainbow(two_matchings_family(3), 3).has_value());
  CHECK_FALSE(brute_force_rainbow(drisko_plus_even_family(2), 2).has_value());
  ColoredFamily disjoint_singles;
  disjoint_singles.vertex_count = 6;
  disjoint_singles.matchings = {Matching({Edge(0, 1)}), Matching({Edge(2, 3)}),
                                Matching({Edge(4, 5)})};
  const auto found = brute_force_rainbow(disjoint_singles, 3);
  REQUIRE(found.has_value());
  CHECK(verify_rainbow(disjoint_singles, *found));
}

TEST_CASE("brute force respects its configured bounds") {
  ColoredFamily family;
  family.vertex_count = 4;
  family.matchings.push_back(Matching({Edge(0, 1)}));
  BruteForceLimits tight;
  tight.max_total_edges = 0;
  CHECK_THROWS_AS(brute_force_rainbow(family, 1, tight),
                  std::invalid_argument);
  tight.max_total_edges = 512;
  tight.max_target = 0;
  CHECK_THROWS_AS(brute_force_rainbow(family, 1, tight),
                  std::invalid_argument);
}

TEST_CASE("maximizing oracle bounds the solver output") {
  for (int trial = 0; trial < 40; ++trial) {
    const ColoredFamily family = random_family(2, 4, 6, 4242 + trial);
    const RainbowMatching engine = rainbow_matching(family, 2);
    const RainbowMatching best = brute_force_rainbow_max(family);
    CHECK(verify_rainbow(family, engine));
    CHECK(verify_rainbow(family, best));
    CHECK(engine.size() <= best.size());
    CHECK(static_cast<int>(engine.size()) >= rainbow_guarantee_floor(2, 4));
  }
}

TEST_CASE("verify_rainbow rejects broken assignments") {
  ColoredFamily family;
  family.vertex_count = 4;
  family.matchings = {Matching({Edge(0, 1), Edge(2, 3)}),
                      Matching({Edge(1, 2)})};
  RainbowMatching good;
  good.assignment = {{0, Edge(0, 1)}};
  CHECK(verify_rainbow(family, good));

  RainbowMatching intersecting;
  intersecting.assignment = {{0, Edge(0, 1)}, {1, Edge(1, 2)}};
  CHECK_FALSE(verify_rainbow(family, intersecting));

  RainbowMatching foreign;
  foreign.assignment = {{0, Edge(1, 2)}};
  CHECK_FALSE(verify_rainbow(family, foreign));

  RainbowMatching out_of_range;
  out_of_range.assignment = {{7, Edge(0, 1)}};
  CHECK_FALSE(verify_rainbow(family, out_of_range));
}

TEST_CASE("main guarantee on random families, small scale") {
  // 120 instances here; the acceptance suite runs the full 5000.
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const ColoredFamily family =
          random_family(n, 3 * n - 2, 10, instance_seed(99, trial));
      const RainbowMatching rm = rainbow_matching(family, n);
      REQUIRE(static_cast<int>(rm.size()) == n);
      REQUIRE(verify_rainbow(family, rm));
    }
  }
}

TEST_CASE("a full augmentation round engages at sixteen vertices") {
  // n-1 copies of one perfect matching of the 16-cycle plus 2n-1 copies of
  // the other (m = 3n-2). Greedy seeding provably stalls at n-1: the two
  // leftover vertices form an edge of the first matching, not the second.
  // The augmentation round then runs with the full 2(n-1)+1 colored paths
  // over 16 vertices and must deliver the final edge.
  const int n = 8;
  const ColoredFamily two = two_matchings_family(n);  // [even x7, odd x7]
  const Matching& even_start = two.matchings.front();
  const Matching& odd_start = two.matchings.back();
  ColoredFamily family;
  family.vertex_count = 2 * n;
  for (int i = 0; i < n - 1; ++i) family.matchings.push_back(even_start);
  for (int i = 0; i < 2 * n - 1; ++i) family.matchings.push_back(odd_start);

  std::vector<RainbowTraceStep> trace;
  const RainbowMatching rm = rainbow_matching(family, n, &trace);
  CHECK(static_cast<int>(rm.size()) == n);
  CHECK(verify_rainbow(family, rm));
  REQUIRE(trace.size() == 1);
  CHECK(trace[0].size_before == static_cast<std::size_t>(n - 1));
  CHECK(trace[0].colors_offered.size() == static_cast<std::size_t>(2 * n - 1));
}

TEST_CASE("bipartite families of 2n-1 matchings always have full rainbows") {
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      const ColoredFamily family =
          random_bipartite_family(n, 2 * n - 1, instance_seed(123, trial));
      const auto found = brute_force_rainbow(family, n);
      REQUIRE(found.has_value());
      REQUIRE(verify_rainbow(family, *found));
    }
  }
}

}  // TEST_SUITE
