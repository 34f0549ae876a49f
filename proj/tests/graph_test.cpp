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

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "rainbow/rng.hpp"

using namespace rainbow;

namespace {

AlternatingPath make_path(std::vector<int> vertices) {
  AlternatingPath p;
  p.vertices = std::move(vertices);
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    p.labels.push_back(i % 2 == 0 ? EdgeLabel::kOutside : EdgeLabel::kMatched);
  }
  return p;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("edges normalize and reject self-loops") {
  const Edge e(3, 1);
  CHECK(e.u == 1);
  CHECK(e.v == 3);
  CHECK(e.other(1) == 3);
  CHECK_THROWS_AS(Edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(Edge(-1, 2), std::invalid_argument);
}

TEST_CASE("graph construction validates and dedups") {
  const Graph g(4, {Edge(0, 1), Edge(1, 0), Edge(2, 3)});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(Edge(0, 1)));
  CHECK(g.neighbors(1) == std::vector<int>{0});
  CHECK_THROWS_AS(Graph(2, {Edge(0, 5)}), std::invalid_argument);
}

TEST_CASE("validate_matching") {
  CHECK(validate_matching(4, Matching({Edge(0, 1), Edge(2, 3)})));
  CHECK_FALSE(validate_matching(4, Matching({Edge(0, 1), Edge(1, 2)})));
  CHECK(validate_matching(0, Matching()));
  CHECK_FALSE(validate_matching(2, Matching({Edge(0, 3)})));
}

TEST_CASE("matching partner lookup") {
  const Matching m({Edge(0, 1), Edge(2, 3)});
  CHECK(m.partner(0) == 1);
  CHECK(m.partner(3) == 2);
  CHECK(m.partner(4) == std::nullopt);
  CHECK(m.covered_vertices() == VertexSet{0, 1, 2, 3});
}

TEST_CASE("symmetric_difference grows an augmenting path by one") {
  SUBCASE("single augmentation") {
    const Matching f({Edge(1, 2)});
    const auto p = make_path({0, 1, 2, 3});
    CHECK(symmetric_difference(f, p) == Matching({Edge(0, 1), Edge(2, 3)}));
  }
  SUBCASE("empty base") {
    const auto p = make_path({0, 1});
    CHECK(symmetric_difference(Matching(), p) == Matching({Edge(0, 1)}));
  }
  SUBCASE("double swap") {
    const Matching f({Edge(1, 2), Edge(3, 4)});
    const auto p = make_path({0, 1, 2, 3, 4, 5});
    const Matching grown = symmetric_difference(f, p);
    CHECK(grown == Matching({Edge(0, 1), Edge(2, 3), Edge(4, 5)}));
    CHECK(grown.size() == f.size() + 1);
    CHECK(validate_matching(6, grown));
  }
}

TEST_CASE("symmetric_difference rejects bad paths") {
  const Matching f({Edge(1, 2)});
  // Non-augmenting: endpoint 2 is covered.
  AlternatingPath not_augmenting;
  not_augmenting.vertices = {0, 1, 2};
  not_augmenting.labels = {EdgeLabel::kOutside, EdgeLabel::kMatched};
  CHECK_THROWS_AS(symmetric_difference(f, not_augmenting),
                  std::invalid_argument);
  // Matched label on a non-f edge.
  auto wrong_f = make_path({0, 3, 4, 5});
  CHECK_THROWS_AS(symmetric_difference(f, wrong_f), std::invalid_argument);
  // Zero-length path is not augmenting.
  CHECK_THROWS_AS(symmetric_difference(f, AlternatingPath::single_vertex(0)),
                  std::invalid_argument);
}

TEST_CASE("validate_alternating_path") {
  const Matching f({Edge(1, 2)});
  AlternatingPath p;
  p.vertices = {0, 1, 2};
  p.labels = {EdgeLabel::kOutside, EdgeLabel::kMatched};
  CHECK(validate_alternating_path(p, f, {Edge(0, 1)}));
  CHECK_FALSE(validate_alternating_path(p, f, {}));

  AlternatingPath loop;
  loop.vertices = {0, 1, 0};
  loop.labels = {EdgeLabel::kOutside, EdgeLabel::kMatched};
  CHECK_FALSE(validate_alternating_path(loop, f, {Edge(0, 1)}));

  AlternatingPath starts_matched;
  starts_matched.vertices = {1, 2};
  starts_matched.labels = {EdgeLabel::kMatched};
  CHECK_FALSE(validate_alternating_path(starts_matched, f, {}));

  CHECK_THROWS_AS(
      validate_alternating_path(p, f, {Edge(1, 2)}), std::invalid_argument);
}

TEST_CASE("zero-length paths validate trivially") {
  CHECK(validate_alternating_path(AlternatingPath::single_vertex(3),
                                  Matching(), {}));
}

TEST_CASE("augmentation properties over random paths") {
  // Random f plus a random augmenting path threaded through some of its
  // edges and some fresh vertices.
  std::mt19937_64 rng(20260809);
  for (int trial = 0; trial < 200; ++trial) {
    const int spare_pairs = 1 + static_cast<int>(bounded(rng, 3));
    const int path_f_edges = static_cast<int>(bounded(rng, 4));

    EdgeList f_edges;
    int next_vertex = 0;
    std::vector<int> path_vertices;
    path_vertices.push_back(next_vertex++);  // exposed start
    for (int i = 0; i < path_f_edges; ++i) {
      const int a = next_vertex++;
      const int b = next_vertex++;
      f_edges.push_back(Edge(a, b));
      path_vertices.push_back(a);
      path_vertices.push_back(b);
    }
    path_vertices.push_back(next_vertex++);  // exposed end
    for (int i = 0; i < spare_pairs; ++i) {
      const int a = next_vertex++;
      const int b = next_vertex++;
      f_edges.push_back(Edge(a, b));
    }
    const Matching f{f_edges};
    const auto p = make_path(path_vertices);
    REQUIRE(is_augmenting_path(p, f));

    const Matching grown = symmetric_difference(f, p);
    CHECK(grown.size() == f.size() + 1);
    CHECK(validate_matching(next_vertex, grown));

    // Involution: applying the same path again restores f.
    AlternatingPath back = p;
    for (auto& label : back.labels) {
      label = label == EdgeLabel::kOutside ? EdgeLabel::kMatched
                                           : EdgeLabel::kOutside;
    }
    // The path is now alternating for `grown` with swapped roles; its
    // endpoints are covered, so flip direction: symmetric difference of the
    // grown matching with the same edge set.
    EdgeList restored = edge_list_minus(grown.edges(),
                                        p.labeled_edges(EdgeLabel::kOutside));
    for (const Edge& e : p.labeled_edges(EdgeLabel::kMatched)) {
      restored.push_back(e);
    }
    CHECK(Matching(restored) == f);
  }
}

TEST_CASE("reversal preserves well-formedness and odd validity") {
  const auto p = make_path({4, 1, 2, 7});
  CHECK(p.is_well_formed());
  const auto r = p.reversed();
  CHECK(r.is_well_formed());
  CHECK(r.vertices == std::vector<int>{7, 2, 1, 4});
  CHECK(r.labels.front() == EdgeLabel::kOutside);

  const Matching f({Edge(1, 2)});
  const EdgeList outside{Edge(1, 4), Edge(2, 7)};
  CHECK(validate_alternating_path(p, f, outside));
  CHECK(validate_alternating_path(r, f, outside));

  AlternatingPath malformed;
  malformed.vertices = {0, 1, 2};
  malformed.labels = {EdgeLabel::kOutside, EdgeLabel::kOutside};
  CHECK_FALSE(malformed.is_well_formed());
  CHECK_FALSE(malformed.reversed().is_well_formed());
}

TEST_CASE("rainbow matching accessors") {
  RainbowMatching rm;
  rm.assignment.emplace(2, Edge(0, 1));
  rm.assignment.emplace(0, Edge(2, 3));
  CHECK(rm.size() == 2);
  CHECK(rm.as_matching() == Matching({Edge(0, 1), Edge(2, 3)}));
}

}  // TEST_SUITE
