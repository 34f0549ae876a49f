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

#ifndef RAINBOW_ENRICHMENT_HPP
#define RAINBOW_ENRICHMENT_HPP

#include "rainbow/gallai_edmonds.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/reach.hpp"

namespace rainbow {

// An edge e is enriching for (f, k) when adding it to k strictly enlarges
// the global odd-reach set. Adding an edge never shrinks reachability, so
// the comparison is a size check. Throws std::invalid_argument when e is an
// f-edge; an edge already in k is never enriching.
bool is_enriching_definitional(const ReachConfig& cfg, const Edge& e);

// Same predicate with the baseline odd-reach set precomputed by the caller;
// avoids recomputing it when scanning many candidates over one config.
bool is_enriching_definitional(const ReachConfig& cfg, const Edge& e,
                               const VertexSet& baseline_or);

// Structural characterization against a canonical decomposition of (g, f):
// e is enriching iff one endpoint lies in some component and the other lies
// in Q or in a different component. Equivalently, e is non-enriching iff it
// touches S, or sits inside Q, or sits inside a single component. Requires
// e outside E(g) (throws otherwise); dec must be the canonical
// decomposition, or the answer is meaningless.
bool is_enriching_structural(const Graph& g, const GeDecomposition& dec,
                             const Edge& e);

// Scans the outside-labeled edges of an augmenting f-alternating path p in
// path order and returns the first enriching one for cfg. When f is maximum
// in (V, f union cfg.k) such an edge must exist; if the scan comes up empty
// anyway, throws ContractViolation with per-edge diagnostics. The path's
// outside edges need not lie in cfg.k or in any graph.
Edge find_enriching_edge_on_path(const ReachConfig& cfg,
                                 const AlternatingPath& p);

}  // namespace rainbow

#endif  // RAINBOW_ENRICHMENT_HPP
