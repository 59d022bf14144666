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

#include <string>

#include "sqroot/errors.hpp"
#include "sqroot/minroot.hpp"

namespace sqroot {
namespace {

void undo(Graph& h, const TrimRecord& rec) {
  for (Vertex v : rec.deleted) {
    h.add_vertex(v);
    h.add_edge(rec.u1, v);
  }
}

void undo(Graph& h, const PathRecord& rec) {
  if (!h.remove_edge(rec.u1, rec.u3)) {
    throw InvariantError("lift: root lacks edge " +
                         std::to_string(rec.u1) + "-" + std::to_string(rec.u3) +
                         " required by path reduction");
  }
  for (Vertex v : rec.deleted) h.add_vertex(v);
  const Vertex u2 = rec.deleted.front();
  h.add_edge(u2, rec.u1);
  h.add_edge(u2, rec.u3);
  for (auto it = rec.deleted.begin() + 1; it != rec.deleted.end(); ++it) {
    h.add_edge(u2, *it);
  }
}

void undo(Graph& h, const SimplicialRecord& rec) {
  for (const SimplicialClassRecord& cls : rec.classes) {
    if (!cls.dropped_anchored.empty()) {
      if (!cls.anchor || !h.has_vertex(*cls.anchor)) {
        throw InvariantError("lift: missing anchor for a twin class");
      }
      for (Vertex v : cls.dropped_anchored) {
        h.add_vertex(v);
        h.add_edge(v, *cls.anchor);
      }
    }
    if (cls.dropped_twins.empty()) continue;
    // Dropped twins become false twins of a pendant survivor.
    std::optional<Vertex> hub;
    for (Vertex s : cls.survivors) {
      if (h.degree(s) == 1) {
        hub = *h.neighbors(s).begin();
        break;
      }
    }
    if (!hub) {
      throw InvariantError("lift: no pendant survivor in a capped twin class");
    }
    for (Vertex v : cls.dropped_twins) {
      h.add_vertex(v);
      h.add_edge(v, *hub);
    }
  }
}

}  // namespace

Graph lift_solution(const Graph& kernel_root, const ReductionTrace& trace) {
  Graph h = kernel_root;
  for (auto it = trace.records.rbegin(); it != trace.records.rend(); ++it) {
    std::visit([&h](const auto& rec) { undo(h, rec); }, *it);
  }
  return h;
}

}  // namespace sqroot
