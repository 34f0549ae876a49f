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

#include "rainbow/sweep.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "rainbow/errors.hpp"
#include "rainbow/io.hpp"
#include "rainbow/rainbow_engine.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

namespace {

// Draws an element of `pool` uniformly at random and removes it. The pool
// stays ascending, so the draw order is fully determined by the stream.
int draw_and_remove(std::mt19937_64& rng, std::vector<int>& pool) {
  const std::size_t index = static_cast<std::size_t>(bounded(rng, pool.size()));
  const int value = pool[index];
  pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(index));
  return value;
}

}  // namespace

ColoredFamily random_family(int n, int m, int vertex_budget,
                            std::uint64_t seed) {
  if (n < 1 || m < 0 || vertex_budget < 2 * n) {
    throw std::invalid_argument(
        "random_family: need n >= 1 and vertex_budget >= 2n");
  }
  std::mt19937_64 rng(seed);
  ColoredFamily family;
  family.vertex_count = vertex_budget;
  for (int c = 0; c < m; ++c) {
    std::vector<int> available;
    for (int v = 0; v < vertex_budget; ++v) available.push_back(v);
    EdgeList edges;
    for (int i = 0; i < n; ++i) {
      const int u = draw_and_remove(rng, available);
      const int v = draw_and_remove(rng, available);
      edges.push_back(Edge(u, v));
    }
    family.matchings.emplace_back(std::move(edges));
  }
  return family;
}

ColoredFamily random_bipartite_family(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 0) {
    throw std::invalid_argument("random_bipartite_family: need n >= 1");
  }
  std::mt19937_64 rng(seed);
  ColoredFamily family;
  family.vertex_count = 2 * n;
  for (int c = 0; c < m; ++c) {
    std::vector<int> left;
    std::vector<int> right;
    for (int v = 0; v < n; ++v) left.push_back(v);
    for (int v = n; v < 2 * n; ++v) right.push_back(v);
    EdgeList edges;
    for (int i = 0; i < n; ++i) {
      const int u = draw_and_remove(rng, left);
      const int v = draw_and_remove(rng, right);
      edges.push_back(Edge(u, v));
    }
    family.matchings.emplace_back(std::move(edges));
  }
  return family;
}

namespace {

// All matchings of exactly `size` disjoint edges over the complete graph on
// `vertex_count` vertices, in lexicographic edge-sequence order.
std::vector<Matching> all_matchings_of_size(int size, int vertex_count) {
  EdgeList all_edges;
  for (int u = 0; u < vertex_count; ++u) {
    for (int v = u + 1; v < vertex_count; ++v) all_edges.push_back(Edge(u, v));
  }
  std::vector<Matching> out;
  EdgeList current;
  VertexSet used;
  auto recurse = [&](auto&& self, std::size_t first) -> void {
    if (static_cast<int>(current.size()) == size) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t i = first; i < all_edges.size(); ++i) {
      const Edge& e = all_edges[i];
      if (used.count(e.u) || used.count(e.v)) continue;
      current.push_back(e);
      used.insert(e.u);
      used.insert(e.v);
      self(self, i + 1);
      current.pop_back();
      used.erase(e.u);
      used.erase(e.v);
    }
  };
  recurse(recurse, 0);
  return out;
}

std::uint64_t multiset_count(std::uint64_t options, int slots) {
  // C(options + slots - 1, slots), saturating at kExhaustiveMaxInstances + 1.
  std::uint64_t result = 1;
  for (int i = 1; i <= slots; ++i) {
    result = result * (options + static_cast<std::uint64_t>(i) - 1) / i;
    if (result > kExhaustiveMaxInstances) return kExhaustiveMaxInstances + 1;
  }
  return result;
}

struct InstanceOutcome {
  bool success = false;
  int found_size = 0;
  bool disagreement = false;
  std::uint64_t seed = 0;
  std::string family_text;
};

InstanceOutcome evaluate_instance(const SweepConfig& cfg,
                                  const ColoredFamily& family,
                                  std::uint64_t seed) {
  InstanceOutcome outcome;
  outcome.seed = seed;
  if (cfg.conjecture_mode || cfg.exhaustive) {
    const auto found = brute_force_rainbow(family, cfg.n);
    outcome.found_size = found ? static_cast<int>(found->size()) : 0;
    outcome.success = found.has_value();
  } else {
    const RainbowMatching result = rainbow_matching(family, cfg.n);
    if (!verify_rainbow(family, result)) {
      throw ContractViolation("sweep: solver output failed verification");
    }
    outcome.found_size = static_cast<int>(result.size());
    outcome.success = outcome.found_size >= cfg.n;
    if (cfg.oracle_check) {
      const RainbowMatching best = brute_force_rainbow_max(family);
      if (result.size() > best.size()) {
        outcome.disagreement = true;
      }
    }
  }
  if (!outcome.success || outcome.disagreement) {
    outcome.family_text = serialize_family(family);
  }
  return outcome;
}

void check_config(const SweepConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("sweep: n must be positive");
  if (cfg.m < 1) throw std::invalid_argument("sweep: m must be positive");
  if (cfg.vertex_budget < 2 * cfg.n) {
    throw std::invalid_argument("sweep: vertex budget below 2n");
  }
  if (!cfg.exhaustive && cfg.trials < 1) {
    throw std::invalid_argument("sweep: trials must be >= 1");
  }
}

}  // namespace

SweepReport run_sweep(const SweepConfig& config) {
  SweepConfig cfg = config;
  if (cfg.conjecture_mode) {
    cfg.m = cfg.n % 2 == 0 ? 2 * cfg.n : 2 * cfg.n - 1;
  }
  check_config(cfg);

  const auto start = std::chrono::steady_clock::now();

  // Materialize the instance list lazily: random instances are derived from
  // (seed, index); exhaustive instances are multiset indices into a catalog.
  std::vector<Matching> catalog;
  std::vector<std::vector<int>> multisets;
  std::uint64_t instance_count = 0;
  if (cfg.exhaustive) {
    if (cfg.n <= kExhaustiveFullMaxN &&
        cfg.vertex_budget <= kExhaustiveFullMaxBudget) {
      catalog = all_matchings_of_size(cfg.n, cfg.vertex_budget);
    } else if (cfg.n <= kExhaustiveStructuredMaxN) {
      // Structured cap: families drawn from the perfect matchings of the
      // complete graph on exactly 2n vertices.
      catalog = all_matchings_of_size(cfg.n, 2 * cfg.n);
    } else {
      throw std::invalid_argument(
          "sweep: exhaustive mode capped at n <= " +
          std::to_string(kExhaustiveStructuredMaxN));
    }
    if (multiset_count(catalog.size(), cfg.m) > kExhaustiveMaxInstances) {
      throw std::invalid_argument(
          "sweep: exhaustive enumeration exceeds the instance cap");
    }
    // Families are unordered for rainbow existence, so enumerate
    // non-decreasing index sequences only.
    std::vector<int> current(cfg.m, 0);
    auto recurse = [&](auto&& self, int slot, int first) -> void {
      if (slot == cfg.m) {
        multisets.push_back(current);
        return;
      }
      for (int i = first; i < static_cast<int>(catalog.size()); ++i) {
        current[slot] = i;
        self(self, slot + 1, i);
      }
    };
    recurse(recurse, 0, 0);
    instance_count = multisets.size();
  } else {
    instance_count = static_cast<std::uint64_t>(cfg.trials);
  }

  std::vector<InstanceOutcome> outcomes(instance_count);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> aborted{false};
  std::string abort_message;
  std::mutex abort_mutex;

  auto worker = [&]() {
    while (!aborted.load()) {
      const std::uint64_t index = next.fetch_add(1);
      if (index >= instance_count) break;
      try {
        if (cfg.exhaustive) {
          ColoredFamily family;
          family.vertex_count = cfg.vertex_budget;
          for (int slot : multisets[index]) {
            family.matchings.push_back(catalog[slot]);
          }
          outcomes[index] = evaluate_instance(cfg, family, 0);
        } else {
          const std::uint64_t iseed = instance_seed(cfg.seed, index);
          const ColoredFamily family =
              random_family(cfg.n, cfg.m, cfg.vertex_budget, iseed);
          outcomes[index] = evaluate_instance(cfg, family, iseed);
        }
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(abort_mutex);
        aborted.store(true);
        if (abort_message.empty()) abort_message = e.what();
      }
    }
  };

  unsigned thread_count = cfg.threads > 0
                              ? static_cast<unsigned>(cfg.threads)
                              : std::thread::hardware_concurrency();
  if (thread_count == 0) thread_count = 1;
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (aborted.load()) {
    throw ContractViolation("sweep aborted: " + abort_message);
  }

  SweepReport report;
  report.config = cfg;
  report.instances_run = instance_count;
  for (std::uint64_t i = 0; i < instance_count; ++i) {
    const InstanceOutcome& o = outcomes[i];
    if (o.success) {
      ++report.successes;
    } else {
      report.failures.push_back(
          SweepFailure{i, o.seed, o.found_size, o.family_text});
    }
    if (o.disagreement) {
      report.oracle_disagreements.push_back(
          SweepFailure{i, o.seed, o.found_size, o.family_text});
    }
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::string SweepReport::to_text() const {
  std::string out;
  out += "sweep: n=" + std::to_string(config.n) + " m=" +
         std::to_string(config.m) + " budget=" +
         std::to_string(config.vertex_budget) +
         (config.exhaustive ? " mode=exhaustive" : " mode=random") +
         (config.conjecture_mode ? " (conjecture)" : "") + "\n";
  if (!config.exhaustive) {
    out += "seed: " + std::to_string(config.seed) + "\n";
  }
  out += "instances: " + std::to_string(instances_run) + "\n";
  out += "successes: " + std::to_string(successes) + "\n";
  out += "failures: " + std::to_string(failures.size()) + "\n";
  const char* failure_name =
      config.conjecture_mode ? "counterexample" : "failure";
  for (const SweepFailure& f : failures) {
    out += std::string(failure_name) + " at instance " +
           std::to_string(f.instance_index) + " (seed " +
           std::to_string(f.instance_seed) + ", best size " +
           std::to_string(f.found_size) + "):\n";
    out += f.family_text;
  }
  for (const SweepFailure& f : oracle_disagreements) {
    out += "oracle disagreement at instance " +
           std::to_string(f.instance_index) + ":\n" + f.family_text;
  }
  out += "wall time: " + std::to_string(wall_time_seconds) + " s\n";
  return out;
}

std::string SweepReport::to_json() const {
  nlohmann::json j;
  j["n"] = config.n;
  j["m"] = config.m;
  j["vertex_budget"] = config.vertex_budget;
  j["mode"] = config.exhaustive ? "exhaustive" : "random";
  j["conjecture_mode"] = config.conjecture_mode;
  j["seed"] = config.seed;
  j["seed_mixing"] = "splitmix64(seed xor instance_index)";
  j["instances_run"] = instances_run;
  j["successes"] = successes;
  auto failure_json = [](const SweepFailure& f) {
    nlohmann::json out;
    out["instance_index"] = f.instance_index;
    out["instance_seed"] = f.instance_seed;
    out["found_size"] = f.found_size;
    out["family"] = f.family_text;
    return out;
  };
  j["failures"] = nlohmann::json::array();
  for (const SweepFailure& f : failures) j["failures"].push_back(failure_json(f));
  j["oracle_disagreements"] = nlohmann::json::array();
  for (const SweepFailure& f : oracle_disagreements) {
    j["oracle_disagreements"].push_back(failure_json(f));
  }
  return j.dump(2) + "\n";
}

}  // namespace rainbow
