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

#ifndef RAINBOW_GALLAI_EDMONDS_HPP
#define RAINBOW_GALLAI_EDMONDS_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

struct GeComponent {
  VertexSet vertices;  // a hypomatchable component of g - S
  int root;            // the unique vertex unmatched inside the component
};

// The (Q, S, {H_i, r_i}) structure of a graph relative to a maximum
// matching f: f restricted to Q is perfect, every component H_i of g - S
// inside R is hypomatchable with f missing exactly r_i in it, and f matches
// S into distinct roots. D indexes the components whose root is f-exposed,
// J the rest; s_of maps j in J to f(r_j).
struct GeDecomposition {
  VertexSet q_set;
  VertexSet s_set;
  std::vector<GeComponent> components;  // ordered by smallest vertex
  std::set<std::size_t> d_indices;
  std::set<std::size_t> j_indices;
  std::map<std::size_t, int> s_of;
};

// Verification outcome; lists every violated clause for diagnosis.
struct GeVerification {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

// Computes the canonical decomposition compatible with the maximum matching
// f: R is the set of vertices missed by some maximum matching (computed as
// {v : nu(g - v) = nu(g)}), S its external neighborhood, Q the rest. Q is
// containment-wise maximal over all valid decompositions, which is exactly
// the condition under which the reachability identities checked by
// verify_decomposition hold with equality. Throws std::invalid_argument if
// f is not a maximum matching of g.
GeDecomposition ge_decompose(const Graph& g, const Matching& f);

// Checks every structural clause of the decomposition against (g, f), plus
// the two reachability identities for K = E(g) \ f:
//   er(K, f) == union of the component vertex sets, and
//   or(K, f) == S union (components minus their roots).
// Valid but non-maximal decompositions fail exactly the identity clauses.
GeVerification verify_decomposition(const Graph& g, const Matching& f,
                                    const GeDecomposition& dec);

}  // namespace rainbow

#endif  // RAINBOW_GALLAI_EDMONDS_HPP
