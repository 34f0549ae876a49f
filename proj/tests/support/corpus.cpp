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

#include "support/corpus.hpp"

#include <random>

#include "rainbow/generators.hpp"
#include "rainbow/rng.hpp"

namespace rainbow::testing {

void for_each_graph(int vertex_count,
                    const std::function<void(const Graph&)>& fn) {
  EdgeList all_edges;
  for (int u = 0; u < vertex_count; ++u) {
    for (int v = u + 1; v < vertex_count; ++v) all_edges.push_back(Edge(u, v));
  }
  const std::uint64_t masks = 1ULL << all_edges.size();
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    EdgeList edges;
    for (std::size_t i = 0; i < all_edges.size(); ++i) {
      if (mask & (1ULL << i)) edges.push_back(all_edges[i]);
    }
    fn(Graph(vertex_count, std::move(edges)));
  }
}

void for_each_graph_up_to(int max_vertices,
                          const std::function<void(const Graph&)>& fn) {
  for (int n = 0; n <= max_vertices; ++n) for_each_graph(n, fn);
}

Graph random_graph(int vertex_count, int percent, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EdgeList edges;
  for (int u = 0; u < vertex_count; ++u) {
    for (int v = u + 1; v < vertex_count; ++v) {
      if (bounded(rng, 100) < static_cast<std::uint64_t>(percent)) {
        edges.push_back(Edge(u, v));
      }
    }
  }
  return Graph(vertex_count, std::move(edges));
}

namespace {

Graph path_graph(int n) {
  EdgeList edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge(i, i + 1));
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  EdgeList edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back(Edge(u, v));
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  EdgeList edges;
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) edges.push_back(Edge(u, v));
  }
  return Graph(a + b, std::move(edges));
}

Graph two_triangles() {
  return Graph(6, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(3, 4), Edge(4, 5),
                   Edge(3, 5)});
}

Graph triangle_with_pendant() {
  return Graph(4, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(2, 3)});
}

Graph star_graph(int leaves) {
  EdgeList edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back(Edge(0, v));
  return Graph(leaves + 1, std::move(edges));
}

}  // namespace

std::vector<Graph> standard_corpus() {
  std::vector<Graph> corpus;
  for_each_graph_up_to(5, [&](const Graph& g) { corpus.push_back(g); });

  for (int k = 3; k <= 8; ++k) corpus.push_back(cycle_graph(k));
  for (int n = 2; n <= 8; ++n) corpus.push_back(path_graph(n));
  for (int n = 4; n <= 8; ++n) corpus.push_back(complete_graph(n));
  corpus.push_back(complete_bipartite(1, 3));
  corpus.push_back(complete_bipartite(2, 3));
  corpus.push_back(complete_bipartite(3, 3));
  corpus.push_back(complete_bipartite(2, 4));
  corpus.push_back(complete_bipartite(3, 5));
  corpus.push_back(two_triangles());
  corpus.push_back(triangle_with_pendant());
  corpus.push_back(star_graph(7));

  for (int n = 6; n <= 8; ++n) {
    for (int percent : {25, 50, 75}) {
      for (int i = 0; i < 14; ++i) {
        corpus.push_back(random_graph(
            n, percent, mix64(0xc0ffee + 1000 * n + 10 * percent + i)));
      }
    }
  }
  return corpus;
}

Graph petersen_graph() {
  return Graph(10, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(0, 4),
                    Edge(0, 5), Edge(1, 6), Edge(2, 7), Edge(3, 8), Edge(4, 9),
                    Edge(5, 7), Edge(7, 9), Edge(6, 9), Edge(6, 8), Edge(5, 8)});
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

}  // namespace rainbow::testing
