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

#ifndef SQROOT_SOLUTION_HPP_
#define SQROOT_SOLUTION_HPP_

#include <cstddef>
#include <optional>

#include "sqroot/graph.hpp"

namespace sqroot {

// A verified square root of some input graph.
struct RootSolution {
  Graph root;
  std::size_t edge_count = 0;
  // Edges of the input that are not in the root.
  std::size_t deletions = 0;
  // Root of the reduced instance before lifting (minimum-root pipeline only).
  std::optional<Graph> kernel_root;
};

}  // namespace sqroot

#endif  // SQROOT_SOLUTION_HPP_
