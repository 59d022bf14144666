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

// DIMACS-style graph files:
//
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>        (m lines, 1-based ids)
//
// Wire id i maps to internal label i-1.

#ifndef SQROOT_CLI_GRAPH_FILE_HPP_
#define SQROOT_CLI_GRAPH_FILE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sqroot/errors.hpp"
#include "sqroot/graph.hpp"
#include "sqroot/minroot.hpp"

namespace sqroot::cli {

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Graph parse_graph_file(std::string_view text);

// Canonical text: header, then edges in lexicographic order. Labels that are
// not exactly 0..n-1 are renumbered by rank and the mapping is written as
// `c label <wire> <original>` lines.
std::string write_graph_file(const Graph& g);

// Kernel instance with `c required <u> <v> trim|path` and `c blocked <u> <v>`
// lines, in the same wire numbering as the graph.
std::string write_labeled_instance(const LabeledInstance& inst);

// Plain undirected DOT, 1-based names.
std::string write_dot(const Graph& g);

Graph read_graph_file(const std::string& path);
// "-" writes to `fallback`.
void write_text_file(const std::string& path, const std::string& text,
                     std::ostream& fallback);

}  // namespace sqroot::cli

#endif  // SQROOT_CLI_GRAPH_FILE_HPP_
