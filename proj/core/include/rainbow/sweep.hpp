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

#ifndef RAINBOW_SWEEP_HPP
#define RAINBOW_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// A seeded random family of m matchings of size n within the vertex budget.
// Frozen algorithm (docs/formats.md): one mt19937_64 stream per family;
// each matching picks n disjoint edges by repeatedly drawing two distinct
// unused vertices from the ascending list of available ones. The budget
// must be at least 2n, so the greedy draw never fails.
ColoredFamily random_family(int n, int m, int vertex_budget,
                            std::uint64_t seed);

// Same, bipartite: sides {0..n-1} and {n..2n-1}, each edge one endpoint per
// side. Every matching is a perfect matching of the bipartition.
ColoredFamily random_bipartite_family(int n, int m, std::uint64_t seed);

struct SweepConfig {
  int n = 1;             // target rainbow size
  int m = 1;             // family size (overridden in conjecture mode)
  int vertex_budget = 2;
  int trials = 1;        // random mode only
  std::uint64_t seed = 0;
  bool exhaustive = false;
  // Sets m to 2n for even n and 2n-1 for odd n, and decides per instance
  // with the exact oracle: a failure is a conjecture counterexample.
  bool conjecture_mode = false;
  // In engine mode, additionally run the oracle and flag any instance where
  // the engine claims more than the true optimum.
  bool oracle_check = false;
  int threads = 1;  // 0 = hardware concurrency
};

// Exhaustive-mode caps (config-visible): full enumeration of all size-n
// matchings within the budget for n <= 2 and budget <= 6; for n == 3 a
// structured catalog (the perfect matchings of the complete graph on 2n
// vertices); nothing beyond.
inline constexpr int kExhaustiveFullMaxN = 2;
inline constexpr int kExhaustiveFullMaxBudget = 6;
inline constexpr int kExhaustiveStructuredMaxN = 3;
inline constexpr std::uint64_t kExhaustiveMaxInstances = 4'000'000;

struct SweepFailure {
  std::uint64_t instance_index = 0;
  std::uint64_t instance_seed = 0;  // 0 in exhaustive mode
  int found_size = 0;
  std::string family_text;  // standalone reproduction input
};

struct SweepReport {
  SweepConfig config;
  std::uint64_t instances_run = 0;
  std::uint64_t successes = 0;
  std::vector<SweepFailure> failures;
  std::vector<SweepFailure> oracle_disagreements;
  double wall_time_seconds = 0.0;

  bool all_succeeded() const { return failures.empty(); }

  // Human-readable summary, including timing.
  std::string to_text() const;
  // Canonical machine-readable report. Timing is deliberately omitted so
  // that identical (input, seed) pairs serialize byte-identically
  // regardless of thread count or machine.
  std::string to_json() const;
};

// Runs the sweep: generates instances (seeded random families, or the
// exhaustive multiset enumeration within the caps), evaluates each with the
// solver and/or the exact oracle as the mode dictates, and aggregates
// deterministically by instance index. Instances are evaluated in parallel
// across a worker pool; results are merged in index order. Any failing
// instance is embedded verbatim in the report for standalone re-checking.
SweepReport run_sweep(const SweepConfig& config);

}  // namespace rainbow

#endif  // RAINBOW_SWEEP_HPP
