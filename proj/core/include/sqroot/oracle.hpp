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

// Brute force over edge subsets. Slow on purpose and easy to audit; the
// other solvers are tested against it.

#ifndef SQROOT_ORACLE_HPP_
#define SQROOT_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "sqroot/errors.hpp"
#include "sqroot/graph.hpp"

namespace sqroot {

inline constexpr std::size_t kOracleEdgeCap = 24;

class OracleCapError : public InputError {
 public:
  explicit OracleCapError(std::size_t edges);
};

struct OracleQuery {
  Graph graph;
  std::size_t min_edges = 0;
  std::size_t max_edges = std::numeric_limits<std::size_t>::max();
  EdgeSet required;
  EdgeSet blocked;
};

struct OracleOptions {
  // Worker threads; results do not depend on it.
  unsigned jobs = 1;
  // Receives the number of subsets examined.
  std::uint64_t* iterations = nullptr;
};

// Every root H of q.graph with required in H, blocked disjoint from H and
// min_edges <= |E_H| <= max_edges, sorted by edge list.
std::vector<Graph> oracle_enumerate_roots(const OracleQuery& q,
                                          OracleOptions opts = {});

// A root with the fewest edges, provided that is at most n-1+k. Ties go to
// the lexicographically smallest edge list.
std::optional<Graph> oracle_min_root(const Graph& g, int k,
                                     OracleOptions opts = {});

// A root with the most edges. Ties as above.
std::optional<Graph> oracle_max_root(const Graph& g, OracleOptions opts = {});

}  // namespace sqroot

#endif  // SQROOT_ORACLE_HPP_
