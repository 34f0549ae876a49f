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

#include "rainbow/generators.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace rainbow {

Graph cycle_graph(int k) {
  if (k < 3) {
    throw std::invalid_argument("cycle_graph: need at least 3 vertices");
  }
  EdgeList edges;
  edges.reserve(k);
  for (int i = 0; i < k; ++i) {
    edges.push_back(Edge(i, (i + 1) % k));
  }
  return Graph(k, std::move(edges));
}

namespace {

Matching cycle_perfect_matching(int n, int offset) {
  EdgeList edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) {
    edges.push_back(Edge((2 * i + offset) % (2 * n), (2 * i + 1 + offset) % (2 * n)));
  }
  return Matching(std::move(edges));
}

}  // namespace

ColoredFamily two_matchings_family(int n) {
  if (n < 2) {
    throw std::invalid_argument("two_matchings_family: need n >= 2");
  }
  ColoredFamily family;
  family.vertex_count = 2 * n;
  const Matching even_start = cycle_perfect_matching(n, 0);
  const Matching odd_start = cycle_perfect_matching(n, 1);
  for (int i = 0; i < n - 1; ++i) family.matchings.push_back(even_start);
  for (int i = 0; i < n - 1; ++i) family.matchings.push_back(odd_start);
  return family;
}

bool chord_extends_to_perfect(int cycle_len, int i, int j) {
  if (cycle_len < 4 || cycle_len % 2 != 0) {
    throw std::invalid_argument(
        "chord_extends_to_perfect: cycle length must be even and >= 4");
  }
  if (i == j || i < 0 || j < 0 || i >= cycle_len || j >= cycle_len) {
    throw std::invalid_argument("chord_extends_to_perfect: bad chord");
  }
  return std::abs(j - i) % 2 == 1;
}

Matching even_chords_matching(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument(
        "even_chords_matching: an all-even-length perfect pairing of the " +
        std::to_string(2 * n) + "-cycle's vertices exists only for even n");
  }
  EdgeList edges;
  edges.reserve(n);
  for (int i = 0; i + 2 < 2 * n; i += 4) {
    edges.push_back(Edge(i, i + 2));
  }
  for (int i = 1; i + 2 < 2 * n; i += 4) {
    edges.push_back(Edge(i, i + 2));
  }
  return Matching(std::move(edges));
}

ColoredFamily drisko_plus_even_family(int n) {
  ColoredFamily family = two_matchings_family(n);
  family.matchings.push_back(even_chords_matching(n));
  return family;
}

ColoredPathFamily sharpness_paths(int k) {
  if (k < 2) {
    throw std::invalid_argument("sharpness_paths: need k >= 2");
  }
  ColoredPathFamily family;
  family.vertex_count = 2 * k + 2;

  EdgeList f_edges;
  for (int i = 1; i <= k; ++i) {
    f_edges.push_back(Edge(2 * i - 1, 2 * i));
  }
  family.f = Matching(std::move(f_edges));

  AlternatingPath straight;
  for (int v = 0; v <= 2 * k + 1; ++v) straight.vertices.push_back(v);
  for (int i = 0; i <= 2 * k; ++i) {
    straight.labels.push_back(i % 2 == 0 ? EdgeLabel::kOutside
                                         : EdgeLabel::kMatched);
  }

  AlternatingPath zigzag;
  zigzag.vertices.push_back(0);
  for (int i = 1; i <= k; ++i) {
    zigzag.vertices.push_back(2 * i);
    zigzag.vertices.push_back(2 * i - 1);
  }
  zigzag.vertices.push_back(2 * k + 1);
  for (int i = 0; i <= 2 * k; ++i) {
    zigzag.labels.push_back(i % 2 == 0 ? EdgeLabel::kOutside
                                       : EdgeLabel::kMatched);
  }

  for (int c = 0; c < k; ++c) {
    family.paths.push_back(ColoredPath{straight, c});
  }
  for (int c = k; c < 2 * k; ++c) {
    family.paths.push_back(ColoredPath{zigzag, c});
  }
  return family;
}

}  // namespace rainbow
