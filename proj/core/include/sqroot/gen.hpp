// Copyright 2026 The sqroot Authors
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

// Seeded instance generators.
//
// The generator is std::mt19937_64 seeded with the 64-bit seed as its single
// constructor argument. Bounded draws use our own rejection sampling rather
// than <random> distributions, whose output is implementation-defined, so a
// seed produces the same instance on every platform.

#ifndef SQROOT_GEN_HPP_
#define SQROOT_GEN_HPP_

#include <cstdint>
#include <random>
#include <string_view>

#include "sqroot/graph.hpp"

namespace sqroot {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform double in [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

struct PlantedInstance {
  Graph square;
  Graph planted_root;
  int k_true = 0;
  std::uint64_t seed = 0;
};

// Random labelled tree on 0..n-1 from a uniform Prüfer sequence.
Graph random_tree(int n, Rng& rng);

// A random tree plus k distinct extra edges, and its square. Throws
// InputError on infeasible (n, k).
PlantedInstance gen_tree_plus_k(int n, int k, std::uint64_t seed);

// Random spanning tree plus every other pair with probability `density`.
Graph gen_random_connected(int n, double density, std::uint64_t seed);

enum class KnownFamily { kCycleSquare, kComplete, kUnionTwoCliques };

// cycle_square(n >= 3): square of C_n, root C_n.
// complete(n >= 1): K_n, star root on vertex 0.
// union_two_cliques(a, b >= 3): cliques of sizes a and b sharing vertices
// 0 and 1; tree root.
// `size2` is read only by union_two_cliques. Throws InputError on bad sizes.
PlantedInstance gen_known_square(KnownFamily kind, int size, int size2 = 0);

// "cycle_square", "complete", "union_two_cliques". Throws InputError.
KnownFamily parse_known_family(std::string_view name);

}  // namespace sqroot

#endif  // SQROOT_GEN_HPP_
