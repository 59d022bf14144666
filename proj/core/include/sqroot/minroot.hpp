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

// Minimum square roots: does a connected graph G on n vertices have a square
// root with at most n-1+k edges?
//
// The decision runs a fixed pipeline. A tree root is searched for first. Then
// G is shrunk by three reduction rules to a labeled instance (G', k, R, B)
// whose size depends on k only: R holds edges every root must contain, B
// edges no root may contain. The labeled instance is solved by exhaustive
// search and its root is lifted back through the recorded reductions.

#ifndef SQROOT_MINROOT_HPP_
#define SQROOT_MINROOT_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sqroot/graph.hpp"
#include "sqroot/solution.hpp"

namespace sqroot {

// Which rule put an edge into the required set. Simplicial reduction treats
// the two groups differently.
enum class EdgeOrigin : std::uint8_t { kTrim, kPath };

struct LabeledInstance {
  Graph graph;
  int k = 0;
  std::map<Edge, EdgeOrigin> required;
  EdgeSet blocked;

  bool is_required(const Edge& e) const { return required.contains(e); }
  bool is_blocked(const Edge& e) const { return blocked.contains(e); }
  EdgeSet required_edges() const;

  // Drops `v` from the graph along with every labeled edge touching it.
  void remove_vertex(Vertex v);

  bool operator==(const LabeledInstance&) const = default;
};

// Pendant clique u3..ur hung off u1 (after the rule's renaming, so that
// N[u1] is strictly inside N[u2]).
struct TrimRecord {
  Vertex u1 = 0;
  Vertex u2 = 0;
  std::vector<Vertex> deleted;
  int r = 0;  // size of the clique {u1, u2} + deleted

  bool operator==(const TrimRecord&) const = default;
};

// An F-triple (u1, u2, u3) with outer vertices u1, u3. `deleted` holds u2
// followed by u4..ur.
struct PathRecord {
  Vertex u1 = 0;
  Vertex u2 = 0;
  Vertex u3 = 0;
  std::vector<Vertex> deleted;
  std::vector<Vertex> x_set;
  std::vector<Vertex> y_set;

  bool operator==(const PathRecord&) const = default;
};

// One twin class touched by the simplicial rule.
struct SimplicialClassRecord {
  // Vertices that carried a trim-required edge and were dropped, all hanging
  // off `anchor` in every solution.
  std::vector<Vertex> dropped_anchored;
  std::optional<Vertex> anchor;
  // Plain twins dropped to cap the class size.
  std::vector<Vertex> dropped_twins;
  // Members still present after the rule.
  std::vector<Vertex> survivors;

  bool operator==(const SimplicialClassRecord&) const = default;
};

struct SimplicialRecord {
  std::vector<SimplicialClassRecord> classes;

  std::size_t deleted_count() const;
  bool operator==(const SimplicialRecord&) const = default;
};

using TraceRecord = std::variant<TrimRecord, PathRecord, SimplicialRecord>;

struct ReductionTrace {
  std::vector<TraceRecord> records;

  std::size_t trim_count() const;
  std::size_t path_count() const;
  std::size_t simplicial_count() const;
  bool operator==(const ReductionTrace&) const = default;
};

struct NoAnswer {
  std::string reason;
};
struct Reduced {
  LabeledInstance instance;
  TraceRecord record;
};
struct NotApplicable {};

using RuleOutcome = std::variant<NoAnswer, Reduced, NotApplicable>;

// Upper bound on the number of non-pendant vertices of any solution of a
// fully reduced instance with parameter k >= 1.
int core_vertex_bound(int k);
// Upper bound on the vertex count of a kernel produced for k >= 1.
std::size_t kernel_vertex_bound(int k);

// A tree T with T^2 = g, or nullopt. Throws DisconnectedInputError.
std::optional<Graph> has_tree_square_root(const Graph& g);

// Step-1 site search of the trimming rule, exposed for diagnostics.
struct TrimSite {
  Vertex u1 = 0;
  Vertex u2 = 0;
  VertexSet component;
};
std::optional<TrimSite> find_trim_site(const Graph& g);

struct FTriple {
  Vertex u1 = 0;
  Vertex u2 = 0;
  Vertex u3 = 0;
  std::vector<Vertex> tail;  // u4..ur
  std::vector<Vertex> x_set;
  std::vector<Vertex> y_set;
};
std::optional<FTriple> find_f_triple(const Graph& g);

RuleOutcome apply_trimming_rule(const LabeledInstance& inst);
RuleOutcome apply_path_reduction_rule(const LabeledInstance& inst);
RuleOutcome apply_simplicial_reduction(const LabeledInstance& inst);

struct Kernel {
  LabeledInstance instance;
  ReductionTrace trace;
  // Set when a trimming site reappeared after path reduction. Not acted on.
  bool late_trim_site = false;
};
struct KernelNo {
  std::string reason;
  ReductionTrace trace;
};
using KernelOutcome = std::variant<KernelNo, Kernel>;

// Runs trimming to exhaustion, then path reduction to exhaustion, then the
// simplicial rule once. Requires g connected, 2-connected, without a tree
// root, and k >= 1; throws InputError otherwise.
KernelOutcome kernelize(const Graph& g, int k);

// Exact search for a spanning H with H^2 = inst.graph, R in H, B disjoint
// from H and |E_H| <= n-1+k.
std::optional<Graph> solve_labeled(const LabeledInstance& inst);

// Replays `trace` backwards. Throws InvariantError on a root that does not
// fit the trace.
Graph lift_solution(const Graph& kernel_root, const ReductionTrace& trace);

enum class DecidedBy : std::uint8_t {
  kTreeRoot,
  kZeroBudget,
  kNotTwoConnected,
  kKernelNo,
  kLabeledSearch,
};

struct MinRootReport {
  std::optional<RootSolution> solution;
  DecidedBy decided_by = DecidedBy::kTreeRoot;
  std::string no_reason;
  std::optional<std::size_t> kernel_vertices;
  std::optional<LabeledInstance> kernel;
  ReductionTrace trace;
};

MinRootReport min_square_root_report(const Graph& g, int k);
std::optional<RootSolution> min_square_root(const Graph& g, int k);

}  // namespace sqroot

#endif  // SQROOT_MINROOT_HPP_
