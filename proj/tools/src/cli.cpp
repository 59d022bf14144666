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

#include "sqroot_cli/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <vector>

#include "sqroot/errors.hpp"
#include "sqroot/gen.hpp"
#include "sqroot/maxroot.hpp"
#include "sqroot/minroot.hpp"
#include "sqroot/oracle.hpp"
#include "sqroot_cli/graph_file.hpp"

namespace sqroot::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  bool yes = false;
  std::optional<std::size_t> edges;
  std::optional<std::size_t> deletions;
  std::optional<std::size_t> kernel_vertices;
  std::optional<ReductionTrace> trace;
  std::vector<std::string> notes;
};

Json opt(const std::optional<std::size_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

int report(const Outcome& o, bool json, std::ostream& out) {
  if (json) {
    Json j;
    j["answer"] = o.yes ? "yes" : "no";
    j["edges"] = opt(o.edges);
    j["deletions"] = opt(o.deletions);
    j["kernel_vertices"] = opt(o.kernel_vertices);
    if (o.trace) {
      j["rule_counts"] = {{"trim", o.trace->trim_count()},
                          {"path", o.trace->path_count()},
                          {"simplicial", o.trace->simplicial_count()}};
    } else {
      j["rule_counts"] = nullptr;
    }
    out << j.dump() << '\n';
  } else {
    out << (o.yes ? "yes" : "no");
    if (o.edges) out << ": root with " << *o.edges << " edges";
    if (o.deletions) out << ", " << *o.deletions << " deletions";
    out << '\n';
    for (const auto& note : o.notes) out << "  " << note << '\n';
  }
  return o.yes ? kExitYes : kExitNo;
}

std::string decided_by_name(DecidedBy d) {
  switch (d) {
    case DecidedBy::kTreeRoot: return "tree root";
    case DecidedBy::kZeroBudget: return "zero budget";
    case DecidedBy::kNotTwoConnected: return "not 2-connected";
    case DecidedBy::kKernelNo: return "reduction rule";
    case DecidedBy::kLabeledSearch: return "kernel search";
  }
  return "?";
}

void emit_root(const Graph& root, const std::string& root_path,
               const std::string& dot_path, std::ostream& out) {
  if (!root_path.empty()) write_text_file(root_path, write_graph_file(root), out);
  if (!dot_path.empty()) write_text_file(dot_path, write_dot(root), out);
}

struct Common {
  std::string input;
  bool json = false;
  unsigned jobs = 1;
  std::string emit_root;
  std::string emit_dot;
};

void add_common(CLI::App* cmd, Common& c, bool with_emit) {
  cmd->add_option("input", c.input, "Graph file")->required();
  cmd->add_flag("--json", c.json, "Print a JSON object instead of text");
  cmd->add_option("--jobs", c.jobs, "Worker threads (does not change output)")
      ->check(CLI::Range(1U, 256U));
  if (with_emit) {
    cmd->add_option("--emit-root", c.emit_root, "Write the root here ('-' = stdout)");
    cmd->add_option("--emit-dot", c.emit_dot, "Write the root as DOT ('-' = stdout)");
  }
}

int cmd_square(const std::string& in, const std::string& out_path,
               std::ostream& out) {
  const Graph g = read_graph_file(in);
  write_text_file(out_path, write_graph_file(compute_square(g)), out);
  return kExitYes;
}

int cmd_verify(const std::string& root_path, const Common& c, std::ostream& out) {
  const Graph h = read_graph_file(root_path);
  const Graph g = read_graph_file(c.input);
  Outcome o;
  o.yes = is_square_root(h, g);
  o.edges = h.edge_count();
  return report(o, c.json, out);
}

int cmd_minroot(const Common& c, int k, const std::string& emit_kernel,
                std::ostream& out) {
  const Graph g = read_graph_file(c.input);
  const MinRootReport r = min_square_root_report(g, k);
  Outcome o;
  o.yes = r.solution.has_value();
  if (r.solution) {
    o.edges = r.solution->edge_count;
    o.deletions = r.solution->deletions;
  }
  o.kernel_vertices = r.kernel_vertices;
  // Rule counts only mean something once the reduction rules have run.
  if (r.decided_by == DecidedBy::kKernelNo || r.decided_by == DecidedBy::kLabeledSearch) {
    o.trace = r.trace;
  }
  o.notes.push_back("decided by: " + decided_by_name(r.decided_by));
  if (!r.no_reason.empty()) o.notes.push_back("reason: " + r.no_reason);
  if (r.kernel_vertices) {
    o.notes.push_back("kernel vertices: " + std::to_string(*r.kernel_vertices));
  }
  o.notes.push_back("rules: trim " + std::to_string(r.trace.trim_count()) +
                    ", path " + std::to_string(r.trace.path_count()) +
                    ", simplicial " + std::to_string(r.trace.simplicial_count()));
  if (!emit_kernel.empty() && r.kernel) {
    write_text_file(emit_kernel, write_labeled_instance(*r.kernel), out);
  }
  const int code = report(o, c.json, out);
  if (r.solution) emit_root(r.solution->root, c.emit_root, c.emit_dot, out);
  return code;
}

int cmd_maxroot(const Common& c, bool fpt, int k, std::ostream& out) {
  const Graph g = read_graph_file(c.input);
  MaxRootStats stats;
  const auto sol = fpt ? max_root_fpt(g, k, &stats) : max_root_exact(g, &stats);
  Outcome o;
  o.yes = sol.has_value();
  if (sol) {
    o.edges = sol->edge_count;
    o.deletions = sol->deletions;
  }
  if (fpt) {
    o.notes.push_back("branching nodes: " + std::to_string(stats.nodes) +
                      ", leaves: " + std::to_string(stats.leaves));
  } else {
    o.notes.push_back("maximal independent sets: " +
                      std::to_string(stats.independent_sets));
  }
  const int code = report(o, c.json, out);
  if (sol) emit_root(sol->root, c.emit_root, c.emit_dot, out);
  return code;
}

int cmd_oracle(const Common& c, bool want_min, int k, std::ostream& out) {
  const Graph g = read_graph_file(c.input);
  std::uint64_t iterations = 0;
  const OracleOptions opts{c.jobs, &iterations};
  const auto root = want_min ? oracle_min_root(g, k, opts) : oracle_max_root(g, opts);
  Outcome o;
  o.yes = root.has_value();
  if (root) {
    o.edges = root->edge_count();
    o.deletions = g.edge_count() - root->edge_count();
  }
  o.notes.push_back("subsets examined: " + std::to_string(iterations));
  const int code = report(o, c.json, out);
  if (root) emit_root(*root, c.emit_root, c.emit_dot, out);
  return code;
}

int to_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw InputError(std::string("bad ") + what + " '" + s + "'");
  }
  return v;
}

double to_double(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw InputError(std::string("bad ") + what + " '" + s + "'");
  }
  return v;
}

void expect_params(const std::vector<std::string>& p, std::size_t n,
                   const std::string& family) {
  if (p.size() != n) {
    throw InputError(family + " takes " + std::to_string(n) + " parameter(s), got " +
                     std::to_string(p.size()));
  }
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            std::uint64_t seed, const std::string& out_path,
            const std::string& root_path, std::ostream& out) {
  Graph graph;
  std::optional<Graph> root;
  if (family == "tree_plus_k") {
    expect_params(params, 2, family);
    auto inst = gen_tree_plus_k(to_int(params[0], "n"), to_int(params[1], "k"), seed);
    graph = std::move(inst.square);
    root = std::move(inst.planted_root);
  } else if (family == "random_connected") {
    expect_params(params, 2, family);
    graph = gen_random_connected(to_int(params[0], "n"),
                                 to_double(params[1], "density"), seed);
  } else {
    const KnownFamily kind = parse_known_family(family);
    const bool two = kind == KnownFamily::kUnionTwoCliques;
    expect_params(params, two ? 2 : 1, family);
    auto inst = gen_known_square(kind, to_int(params[0], "size"),
                                 two ? to_int(params[1], "size") : 0);
    graph = std::move(inst.square);
    root = std::move(inst.planted_root);
  }
  write_text_file(out_path, write_graph_file(graph), out);
  if (!root_path.empty()) {
    if (!root) throw InputError(family + " has no planted root");
    write_text_file(root_path, write_graph_file(*root), out);
  }
  return kExitYes;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Square roots of graphs", "sqroot"};
  app.require_subcommand(1);

  std::string square_in;
  std::string square_out = "-";
  auto* square = app.add_subcommand("square", "Write the square of a graph");
  square->add_option("input", square_in, "Graph file")->required();
  square->add_option("-o,--output", square_out, "Output file ('-' = stdout)");
  // Accepted for a uniform command line; these commands are sequential.
  unsigned unused_jobs = 1;
  square->add_option("--jobs", unused_jobs, "Ignored")->check(CLI::Range(1U, 256U));

  Common verify_opts;
  std::string verify_root;
  auto* verify = app.add_subcommand("verify", "Check that ROOT squares to GRAPH");
  verify->add_option("root", verify_root, "Candidate root file")->required();
  add_common(verify, verify_opts, false);

  Common min_opts;
  int min_k = 0;
  std::string emit_kernel;
  auto* minroot = app.add_subcommand("minroot", "Root with at most n-1+k edges");
  add_common(minroot, min_opts, true);
  minroot->add_option("-k", min_k, "Extra edges beyond a tree")->required()
      ->check(CLI::NonNegativeNumber);
  minroot->add_option("--emit-kernel", emit_kernel,
                      "Write the labeled kernel ('-' = stdout)");

  Common max_opts;
  int max_k = 0;
  bool max_fpt = false;
  bool max_exact = false;
  auto* maxroot = app.add_subcommand("maxroot", "Root with the fewest deletions");
  add_common(maxroot, max_opts, true);
  auto* fpt_flag = maxroot->add_flag("--fpt", max_fpt, "At most k deletions");
  auto* exact_flag = maxroot->add_flag("--exact", max_exact, "Maximum root");
  auto* max_k_opt = maxroot->add_option("-k", max_k, "Deletion budget")
                        ->check(CLI::NonNegativeNumber);
  fpt_flag->excludes(exact_flag);
  fpt_flag->needs(max_k_opt);
  exact_flag->excludes(max_k_opt);

  Common or_opts;
  int or_k = 0;
  bool or_min = false;
  bool or_max = false;
  auto* oracle = app.add_subcommand("oracle", "Brute-force reference answers");
  add_common(oracle, or_opts, true);
  auto* min_flag = oracle->add_flag("--min", or_min, "Minimum root within n-1+k");
  auto* max_flag = oracle->add_flag("--max", or_max, "Maximum root");
  auto* or_k_opt = oracle->add_option("-k", or_k, "Extra edges beyond a tree")
                       ->check(CLI::NonNegativeNumber);
  min_flag->excludes(max_flag);
  min_flag->needs(or_k_opt);
  max_flag->excludes(or_k_opt);

  std::string gen_family;
  std::vector<std::string> gen_params;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "-";
  std::string gen_root;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("family", gen_family,
                  "tree_plus_k | random_connected | cycle_square | complete | "
                  "union_two_cliques")
      ->required();
  gen->add_option("params", gen_params, "Family parameters");
  gen->add_option("--seed", gen_seed, "PRNG seed");
  gen->add_option("-o,--output", gen_out, "Output file ('-' = stdout)");
  gen->add_option("--emit-root", gen_root, "Write the planted root");
  gen->add_option("--jobs", unused_jobs, "Ignored")->check(CLI::Range(1U, 256U));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    if (maxroot->parsed() && max_fpt == max_exact) {
      throw CLI::ValidationError("maxroot needs exactly one of --fpt, --exact");
    }
    if (oracle->parsed() && or_min == or_max) {
      throw CLI::ValidationError("oracle needs exactly one of --min, --max");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitUsage;
  }

  try {
    if (square->parsed()) return cmd_square(square_in, square_out, out);
    if (verify->parsed()) return cmd_verify(verify_root, verify_opts, out);
    if (minroot->parsed()) return cmd_minroot(min_opts, min_k, emit_kernel, out);
    if (maxroot->parsed()) return cmd_maxroot(max_opts, max_fpt, max_k, out);
    if (oracle->parsed()) return cmd_oracle(or_opts, or_min, or_k, out);
    if (gen->parsed()) {
      return cmd_gen(gen_family, gen_params, gen_seed, gen_out, gen_root, out);
    }
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace sqroot::cli
