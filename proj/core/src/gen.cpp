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

#include "sqroot/gen.hpp"

#include <string>
#include <utility>
#include <vector>

#include "sqroot/errors.hpp"

namespace sqroot {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("Rng::below: bound must be positive");
  // Reject the low residues so that every value has equal weight.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

double Rng::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Graph random_tree(int n, Rng& rng) {
  if (n < 1) throw InputError("random_tree: n must be >= 1");
  Graph t(static_cast<std::size_t>(n));
  if (n == 2) t.add_edge(0, 1);
  if (n <= 2) return t;

  std::vector<int> code(n - 2);
  for (int& c : code) c = static_cast<int>(rng.below(n));
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  VertexSet leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  for (int c : code) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    t.add_edge(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  t.add_edge(*leaves.begin(), *std::next(leaves.begin()));
  return t;
}

PlantedInstance gen_tree_plus_k(int n, int k, std::uint64_t seed) {
  if (n < 2) throw InputError("gen_tree_plus_k: n must be >= 2");
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (k < 0 || k > pairs - (n - 1)) {
    throw InputError("gen_tree_plus_k: k=" + std::to_string(k) +
                     " is infeasible for n=" + std::to_string(n));
  }
  Rng rng(seed);
  Graph root = random_tree(n, rng);

  std::vector<Edge> spare;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!root.has_edge(a, b)) spare.emplace_back(a, b);
    }
  }
  // Partial Fisher-Yates: the first k slots become a uniform k-subset.
  for (int i = 0; i < k; ++i) {
    const auto j = i + rng.below(spare.size() - i);
    std::swap(spare[i], spare[j]);
    root.add_edge(spare[i]);
  }
  Graph square = compute_square(root);
  return PlantedInstance{std::move(square), std::move(root), k, seed};
}

Graph gen_random_connected(int n, double density, std::uint64_t seed) {
  if (n < 1) throw InputError("gen_random_connected: n must be >= 1");
  if (!(density >= 0.0 && density <= 1.0)) {
    throw InputError("gen_random_connected: density must lie in [0, 1]");
  }
  Rng rng(seed);
  Graph g = random_tree(n, rng);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b) && rng.unit() < density) g.add_edge(a, b);
    }
  }
  return g;
}

PlantedInstance gen_known_square(KnownFamily kind, int size, int size2) {
  Graph root;
  switch (kind) {
    case KnownFamily::kCycleSquare: {
      if (size < 3) throw InputError("cycle_square needs n >= 3");
      root = Graph(static_cast<std::size_t>(size));
      for (Vertex v = 0; v < size; ++v) root.add_edge(v, (v + 1) % size);
      break;
    }
    case KnownFamily::kComplete: {
      if (size < 1) throw InputError("complete needs n >= 1");
      root = Graph(static_cast<std::size_t>(size));
      for (Vertex v = 1; v < size; ++v) root.add_edge(0, v);
      break;
    }
    case KnownFamily::kUnionTwoCliques: {
      if (size < 3 || size2 < 3) {
        throw InputError("union_two_cliques needs both clique sizes >= 3");
      }
      // Vertices 0 and 1 are shared; 2..a-1 are private to the first clique,
      // the rest to the second.
      root = Graph(static_cast<std::size_t>(size + size2 - 2));
      root.add_edge(0, 1);
      for (Vertex v = 2; v < size; ++v) root.add_edge(0, v);
      for (Vertex v = size; v < size + size2 - 2; ++v) root.add_edge(1, v);
      break;
    }
  }
  const int n = static_cast<int>(root.vertex_count());
  const int k_true = static_cast<int>(root.edge_count()) - (n - 1);
  Graph square = compute_square(root);
  return PlantedInstance{std::move(square), std::move(root), k_true, 0};
}

KnownFamily parse_known_family(std::string_view name) {
  if (name == "cycle_square") return KnownFamily::kCycleSquare;
  if (name == "complete") return KnownFamily::kComplete;
  if (name == "union_two_cliques") return KnownFamily::kUnionTwoCliques;
  throw InputError("unknown family '" + std::string(name) + "'");
}

}  // namespace sqroot
