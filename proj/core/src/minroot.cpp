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

// Applies `rule` until it stops firing. Returns a reason on a no-answer.
template <typename Rule>
std::optional<std::string> exhaust(LabeledInstance& inst, ReductionTrace& trace,
                                   Rule rule) {
  for (;;) {
    RuleOutcome out = rule(inst);
    if (auto* no = std::get_if<NoAnswer>(&out)) return no->reason;
    auto* red = std::get_if<Reduced>(&out);
    if (red == nullptr) return std::nullopt;
    inst = std::move(red->instance);
    trace.records.push_back(std::move(red->record));
  }
}

}  // namespace

KernelOutcome kernelize(const Graph& g, int k) {
  if (k < 1) throw InputError("kernelize: k must be >= 1");
  const ConnectivityProfile profile = connectivity_profile(g);
  if (!profile.is_connected) {
    throw DisconnectedInputError(profile.components.size());
  }
  if (!profile.is_two_connected) {
    throw InputError("kernelize: input is not 2-connected");
  }
  if (has_tree_square_root(g)) {
    throw InputError("kernelize: input has a tree square root");
  }

  LabeledInstance inst{g, k, {}, {}};
  ReductionTrace trace;
  if (auto no = exhaust(inst, trace, apply_trimming_rule)) {
    return KernelNo{*no, std::move(trace)};
  }
  if (auto no = exhaust(inst, trace, apply_path_reduction_rule)) {
    return KernelNo{*no, std::move(trace)};
  }
  const bool late_trim = find_trim_site(inst.graph).has_value();

  RuleOutcome out = apply_simplicial_reduction(inst);
  if (auto* no = std::get_if<NoAnswer>(&out)) {
    return KernelNo{no->reason, std::move(trace)};
  }
  auto& red = std::get<Reduced>(out);
  trace.records.push_back(std::move(red.record));
  return Kernel{std::move(red.instance), std::move(trace), late_trim};
}

MinRootReport min_square_root_report(const Graph& g, int k) {
  if (k < 0) throw InputError("k must be non-negative");
  const ConnectivityProfile profile = connectivity_profile(g);
  if (!profile.is_connected) {
    throw DisconnectedInputError(profile.components.size());
  }
  const std::size_t n = g.vertex_count();
  const std::size_t budget = n == 0 ? 0 : n - 1 + static_cast<std::size_t>(k);

  MinRootReport report;
  auto accept = [&](Graph root, std::optional<Graph> kernel_root) {
    if (!is_square_root(root, g) || root.edge_count() > budget) {
      throw InvariantError("minroot: produced root failed verification");
    }
    const std::size_t m = root.edge_count();
    report.solution = RootSolution{std::move(root), m, g.edge_count() - m,
                                   std::move(kernel_root)};
  };

  if (auto tree = has_tree_square_root(g)) {
    report.decided_by = DecidedBy::kTreeRoot;
    accept(std::move(*tree), std::nullopt);
    return report;
  }
  if (k == 0) {
    report.decided_by = DecidedBy::kZeroBudget;
    report.no_reason = "no tree square root";
    return report;
  }
  if (n >= 3 && !profile.is_two_connected) {
    report.decided_by = DecidedBy::kNotTwoConnected;
    report.no_reason = "not 2-connected and no tree square root";
    return report;
  }

  KernelOutcome kernel = kernelize(g, k);
  if (auto* no = std::get_if<KernelNo>(&kernel)) {
    report.decided_by = DecidedBy::kKernelNo;
    report.no_reason = no->reason;
    report.trace = std::move(no->trace);
    return report;
  }
  auto& ker = std::get<Kernel>(kernel);
  report.decided_by = DecidedBy::kLabeledSearch;
  report.kernel_vertices = ker.instance.graph.vertex_count();
  report.trace = ker.trace;
  report.kernel = ker.instance;
  auto kernel_root = solve_labeled(ker.instance);
  if (!kernel_root) {
    report.no_reason = "labeled kernel has no solution";
    return report;
  }
  Graph lifted = lift_solution(*kernel_root, ker.trace);
  accept(std::move(lifted), std::move(*kernel_root));
  return report;
}

std::optional<RootSolution> min_square_root(const Graph& g, int k) {
  return min_square_root_report(g, k).solution;
}

}  // namespace sqroot
