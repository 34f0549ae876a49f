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

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "rainbow/enrichment.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/matching.hpp"
#include "rainbow/reach.hpp"

namespace rainbow {

namespace {

void check_path_family(const ColoredPathFamily& family) {
  std::set<int> colors;
  for (const ColoredPath& cp : family.paths) {
    if (!colors.insert(cp.color).second) {
      throw std::invalid_argument(
          "multicolored_augmenting_path: repeated color " +
          std::to_string(cp.color));
    }
    if (!is_augmenting_path(cp.path, family.f)) {
      throw std::invalid_argument(
          "multicolored_augmenting_path: path for color " +
          std::to_string(cp.color) + " is not augmenting for f");
    }
    for (int v : cp.path.vertices) {
      if (v >= family.vertex_count) {
        throw std::invalid_argument(
            "multicolored_augmenting_path: path vertex out of budget");
      }
    }
  }
  if (!validate_matching(family.vertex_count, family.f)) {
    throw std::invalid_argument(
        "multicolored_augmenting_path: f is not a matching within budget");
  }
}

}  // namespace

std::optional<MulticoloredPath> multicolored_augmenting_path(
    const ColoredPathFamily& family) {
  check_path_family(family);
  const bool guaranteed = family.paths.size() > 2 * family.f.size();

  EdgeList grown;                 // the accumulating edge set
  std::map<Edge, int> edge_color; // who donated each edge

  auto escape = [&]() -> std::optional<MulticoloredPath> {
    const ReachConfig cfg =
        ReachConfig::make(family.vertex_count, family.f, grown);
    auto path = find_kf_augmenting_path(cfg);
    if (!path) return std::nullopt;
    MulticoloredPath out;
    out.path = *path;
    for (std::size_t i = 0; i < path->labels.size(); ++i) {
      if (path->labels[i] == EdgeLabel::kOutside) {
        out.edge_colors.push_back(edge_color.at(path->edge(i)));
      }
    }
    return out;
  };

  for (const ColoredPath& cp : family.paths) {
    const ReachConfig cfg =
        ReachConfig::make(family.vertex_count, family.f, grown);
    const Edge e = find_enriching_edge_on_path(cfg, cp.path);
    grown = edge_list_union(grown, {e});
    edge_color.emplace(e, cp.color);
    if (auto found = escape()) return found;
  }

  if (guaranteed) {
    throw ContractViolation(
        "multicolored_augmenting_path: " + std::to_string(family.paths.size()) +
        " paths over a matching of size " + std::to_string(family.f.size()) +
        " exhausted without an augmenting escape");
  }
  return std::nullopt;
}

int rainbow_guarantee_floor(int n, int m) {
  return std::min(n, (m + 2) / 3);
}

RainbowMatching rainbow_matching(const ColoredFamily& family, int n,
                                 std::vector<RainbowTraceStep>* trace) {
  if (n < 1) {
    throw std::invalid_argument("rainbow_matching: target must be positive");
  }
  const int m = static_cast<int>(family.color_count());
  for (int c = 0; c < m; ++c) {
    if (static_cast<int>(family.matchings[c].size()) < n) {
      throw std::invalid_argument("rainbow_matching: matching " +
                                  std::to_string(c) + " has size " +
                                  std::to_string(family.matchings[c].size()) +
                                  " < n = " + std::to_string(n));
    }
    if (!validate_matching(family.vertex_count, family.matchings[c])) {
      throw std::invalid_argument("rainbow_matching: matching " +
                                  std::to_string(c) + " is invalid");
    }
  }

  // Only n-subsets matter; truncate larger matchings to their first n edges
  // in canonical order.
  std::vector<Matching> palette;
  palette.reserve(m);
  for (const Matching& mi : family.matchings) {
    if (static_cast<int>(mi.size()) > n) {
      EdgeList head(mi.edges().begin(), mi.edges().begin() + n);
      palette.emplace_back(std::move(head));
    } else {
      palette.push_back(mi);
    }
  }

  RainbowMatching rainbow;

  // Greedy seed: extend color by color in index order with the first edge
  // disjoint from everything chosen so far.
  {
    VertexSet used;
    for (int c = 0; c < m && static_cast<int>(rainbow.size()) < n; ++c) {
      for (const Edge& e : palette[c].edges()) {
        if (!used.count(e.u) && !used.count(e.v)) {
          rainbow.assignment.emplace(c, e);
          used.insert(e.u);
          used.insert(e.v);
          break;
        }
      }
    }
  }

  const int floor = rainbow_guarantee_floor(n, m);

  while (static_cast<int>(rainbow.size()) < n) {
    const int k = static_cast<int>(rainbow.size());
    std::vector<int> unrepresented;
    for (int c = 0; c < m; ++c) {
      if (!rainbow.assignment.count(c)) unrepresented.push_back(c);
    }
    if (static_cast<int>(unrepresented.size()) < 2 * k + 1) {
      if (k >= floor) return rainbow;  // guarantee met, target out of reach
      throw ContractViolation(
          "rainbow_matching: only " + std::to_string(unrepresented.size()) +
          " unrepresented colors at size " + std::to_string(k) +
          ", below the guarantee floor " + std::to_string(floor));
    }
    unrepresented.resize(2 * k + 1);  // lowest color indices first

    ColoredPathFamily paths;
    paths.vertex_count = family.vertex_count;
    paths.f = rainbow.as_matching();
    for (int c : unrepresented) {
      paths.paths.push_back(
          ColoredPath{find_augmenting_path(paths.f, palette[c]), c});
    }

    auto result = multicolored_augmenting_path(paths);
    if (!result) {
      throw ContractViolation(
          "rainbow_matching: multicolored search failed with " +
          std::to_string(paths.paths.size()) + " paths at size " +
          std::to_string(k));
    }

    // Swap the path through the current rainbow edges. Outside edges enter
    // with their donor colors; matched edges leave and free their colors.
    const Matching grown_matching =
        symmetric_difference(paths.f, result->path);
    std::map<int, Edge> new_assignment;
    for (const auto& [color, edge] : rainbow.assignment) {
      if (grown_matching.contains(edge)) new_assignment.emplace(color, edge);
    }
    std::size_t outside_index = 0;
    std::vector<int> colors_used;
    for (std::size_t i = 0; i < result->path.labels.size(); ++i) {
      if (result->path.labels[i] != EdgeLabel::kOutside) continue;
      const int color = result->edge_colors[outside_index++];
      new_assignment.emplace(color, result->path.edge(i));
      colors_used.push_back(color);
    }
    if (new_assignment.size() != rainbow.size() + 1) {
      throw ContractViolation(
          "rainbow_matching: augmentation step did not grow the matching by "
          "exactly one edge");
    }
    if (trace) {
      trace->push_back(RainbowTraceStep{rainbow.size(), unrepresented,
                                        std::move(colors_used)});
    }
    rainbow.assignment = std::move(new_assignment);
  }
  return rainbow;
}

namespace {

struct RainbowSearcher {
  const std::vector<const Matching*>& order;
  const std::vector<int>& color_of;
  int target;
  VertexSet used;
  RainbowMatching current;
  RainbowMatching best;

  bool search(std::size_t index, bool stop_at_target) {
    if (static_cast<int>(current.size()) > static_cast<int>(best.size())) {
      best = current;
    }
    if (stop_at_target && static_cast<int>(current.size()) >= target) {
      return true;
    }
    if (index >= order.size()) return false;
    // Prune: even taking every remaining color cannot reach the target.
    if (stop_at_target &&
        current.size() + (order.size() - index) < static_cast<std::size_t>(target)) {
      return false;
    }
    for (const Edge& e : order[index]->edges()) {
      if (used.count(e.u) || used.count(e.v)) continue;
      used.insert(e.u);
      used.insert(e.v);
      current.assignment.emplace(color_of[index], e);
      if (search(index + 1, stop_at_target)) return true;
      current.assignment.erase(color_of[index]);
      used.erase(e.u);
      used.erase(e.v);
    }
    return search(index + 1, stop_at_target);  // skip this color
  }
};

void check_brute_force_limits(const ColoredFamily& family, int target,
                              const BruteForceLimits& limits) {
  std::size_t total = 0;
  for (const Matching& m : family.matchings) total += m.size();
  if (total > limits.max_total_edges) {
    throw std::invalid_argument(
        "brute_force_rainbow: total edge count " + std::to_string(total) +
        " exceeds the configured bound " +
        std::to_string(limits.max_total_edges));
  }
  if (target > limits.max_target) {
    throw std::invalid_argument("brute_force_rainbow: target " +
                                std::to_string(target) +
                                " exceeds the configured bound " +
                                std::to_string(limits.max_target));
  }
}

RainbowSearcher make_searcher(const ColoredFamily& family, int target,
                              std::vector<const Matching*>& order,
                              std::vector<int>& color_of) {
  std::vector<int> colors(family.color_count());
  std::iota(colors.begin(), colors.end(), 0);
  std::stable_sort(colors.begin(), colors.end(), [&](int a, int b) {
    return family.matchings[a].size() < family.matchings[b].size();
  });
  for (int c : colors) {
    order.push_back(&family.matchings[c]);
    color_of.push_back(c);
  }
  return RainbowSearcher{order, color_of, target, {}, {}, {}};
}

}  // namespace

std::optional<RainbowMatching> brute_force_rainbow(const ColoredFamily& family,
                                                   int target,
                                                   BruteForceLimits limits) {
  if (target < 1) {
    throw std::invalid_argument("brute_force_rainbow: target must be positive");
  }
  check_brute_force_limits(family, target, limits);
  std::vector<const Matching*> order;
  std::vector<int> color_of;
  RainbowSearcher searcher = make_searcher(family, target, order, color_of);
  if (searcher.search(0, /*stop_at_target=*/true)) return searcher.current;
  return std::nullopt;
}

RainbowMatching brute_force_rainbow_max(const ColoredFamily& family,
                                        BruteForceLimits limits) {
  check_brute_force_limits(family, 0, limits);
  std::vector<const Matching*> order;
  std::vector<int> color_of;
  RainbowSearcher searcher =
      make_searcher(family, static_cast<int>(family.color_count()), order,
                    color_of);
  searcher.search(0, /*stop_at_target=*/false);
  return searcher.best;
}

bool verify_rainbow(const ColoredFamily& family, const RainbowMatching& rm) {
  VertexSet used;
  for (const auto& [color, edge] : rm.assignment) {
    if (color < 0 || color >= static_cast<int>(family.color_count())) {
      return false;
    }
    if (!family.matchings[color].contains(edge)) return false;
    if (used.count(edge.u) || used.count(edge.v)) return false;
    used.insert(edge.u);
    used.insert(edge.v);
  }
  return true;
}

}  // namespace rainbow
