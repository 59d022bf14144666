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

#include "sqroot_cli/graph_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace sqroot::cli {

ParseError::ParseError(std::size_t line, const std::string& what)
    : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

// Reads a non-negative integer token; anything else is an error.
long long read_id(std::istringstream& in, std::size_t line, const char* what) {
  std::string tok;
  if (!(in >> tok)) throw ParseError(line, std::string("missing ") + what);
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; }) ||
      tok.size() > 9) {
    throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  }
  return std::stoll(tok);
}

void expect_end(std::istringstream& in, std::size_t line) {
  std::string extra;
  if (in >> extra) throw ParseError(line, "trailing token '" + extra + "'");
}

// Internal label -> 1-based wire id.
std::map<Vertex, long long> wire_ids(const Graph& g) {
  std::map<Vertex, long long> ids;
  long long next = 1;
  for (Vertex v : g.vertices()) ids.emplace(v, next++);
  return ids;
}

bool is_contiguous(const Graph& g) {
  const auto vs = g.vertices();
  return vs.empty() ||
         (vs.front() == 0 && vs.back() == static_cast<Vertex>(vs.size() - 1));
}

void write_body(std::ostringstream& out, const Graph& g,
                const std::map<Vertex, long long>& ids) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << ids.at(e.u()) << ' ' << ids.at(e.v()) << '\n';
  }
}

void write_labels(std::ostringstream& out, const Graph& g,
                  const std::map<Vertex, long long>& ids) {
  if (is_contiguous(g)) return;
  for (const auto& [v, id] : ids) {
    out << "c label " << id << ' ' << v + 1 << '\n';
  }
}

}  // namespace

Graph parse_graph_file(std::string_view text) {
  std::istringstream lines{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  long long seen = 0;
  Graph g;

  while (std::getline(lines, raw)) {
    ++line_no;
    std::istringstream in(raw);
    std::string kind;
    if (!(in >> kind)) continue;
    if (kind == "c") continue;
    if (kind == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      std::string format;
      if (!(in >> format) || format != "edge") {
        throw ParseError(line_no, "header must read 'p edge <n> <m>'");
      }
      n = read_id(in, line_no, "vertex count");
      m = read_id(in, line_no, "edge count");
      expect_end(in, line_no);
      g = Graph(static_cast<std::size_t>(n));
      have_header = true;
    } else if (kind == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      const long long u = read_id(in, line_no, "vertex id");
      const long long v = read_id(in, line_no, "vertex id");
      expect_end(in, line_no);
      for (long long x : {u, v}) {
        if (x < 1 || x > n) {
          throw ParseError(line_no, "vertex id " + std::to_string(x) +
                                        " outside [1, " + std::to_string(n) + "]");
        }
      }
      if (u == v) {
        throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
      }
      if (!g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1))) {
        throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " +
                                      std::to_string(v));
      }
      ++seen;
    } else {
      throw ParseError(line_no, "unknown record type '" + kind + "'");
    }
  }
  line_no = std::max<std::size_t>(line_no, 1);
  if (!have_header) throw ParseError(line_no, "missing 'p edge' header");
  if (seen != m) {
    throw ParseError(line_no, "header declares " + std::to_string(m) +
                                  " edges but " + std::to_string(seen) +
                                  " were given");
  }
  return g;
}

std::string write_graph_file(const Graph& g) {
  const auto ids = wire_ids(g);
  std::ostringstream out;
  write_labels(out, g, ids);
  write_body(out, g, ids);
  return out.str();
}

std::string write_labeled_instance(const LabeledInstance& inst) {
  const Graph& g = inst.graph;
  const auto ids = wire_ids(g);
  std::ostringstream out;
  out << "c kernel k " << inst.k << '\n';
  write_labels(out, g, ids);
  for (const auto& [e, origin] : inst.required) {
    out << "c required " << ids.at(e.u()) << ' ' << ids.at(e.v()) << ' '
        << (origin == EdgeOrigin::kTrim ? "trim" : "path") << '\n';
  }
  for (const Edge& e : inst.blocked) {
    out << "c blocked " << ids.at(e.u()) << ' ' << ids.at(e.v()) << '\n';
  }
  write_body(out, g, ids);
  return out.str();
}

std::string write_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v : g.vertices()) out << "  " << v + 1 << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.u() + 1 << " -- " << e.v() + 1 << ";\n";
  }
  out << "}\n";
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph_file(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " +
                                   std::string(e.what()).substr(
                                       std::string(e.what()).find(": ") + 2));
  }
}

void write_text_file(const std::string& path, const std::string& text,
                     std::ostream& fallback) {
  if (path == "-") {
    fallback << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write to '" + path + "' failed");
}

}  // namespace sqroot::cli
