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

#ifndef RAINBOW_RNG_HPP
#define RAINBOW_RNG_HPP

#include <cstdint>
#include <random>

namespace rainbow {

// All randomized code in this project goes through the helpers below so that
// a (seed, index) pair reproduces bit-identical results on every platform.
// std::mt19937_64 is fully specified by the standard; the std::* distribution
// templates are not, so we never use them. The exact algorithms here are
// frozen and documented in docs/formats.md -- do not change them, or every
// recorded sweep seed becomes unreproducible.

// SplitMix64 finalizer (Steele, Lea, Flood). Used to derive per-instance
// seeds: instance_seed = mix64(sweep_seed ^ instance_index).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t instance_seed(std::uint64_t sweep_seed,
                                   std::uint64_t index) {
  return mix64(sweep_seed ^ index);
}

// Uniform-ish draw from [0, n). Plain modulo reduction: the bias for the
// tiny ranges used here (vertex counts, edge counts) is irrelevant and the
// result is trivially portable.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

}  // namespace rainbow

#endif  // RAINBOW_RNG_HPP
