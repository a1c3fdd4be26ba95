// Copyright 2026 The Authors.
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

#include "zonotopal/io.h"

#include <fstream>
#include <sstream>
#include <vector>

#include "zonotopal/errors.h"

namespace zonotopal {
namespace {

std::vector<std::string> tokens(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream words(line);
    std::string w;
    while (words >> w) out.push_back(w);
  }
  return out;
}

std::size_t parse_count(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a nonnegative integer, got '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ParseError("count out of range: '" + s + "'");
  }
}

}  // namespace

QMatrix parse_matrix(std::string_view text) {
  const auto tok = tokens(text);
  if (tok.size() < 2) throw ParseError("matrix header 'n m' missing");
  const std::size_t n = parse_count(tok[0]), m = parse_count(tok[1]);
  if (n > 1024 || m > 1024) throw ParseError("matrix dimensions too large");
  if (tok.size() != 2 + n * m)
    throw ParseError("expected " + std::to_string(n * m) + " entries, got " +
                     std::to_string(tok.size() - 2));
  QMatrix a(n, m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) a(r, c) = parse_rational(tok[2 + r * m + c]);
  return a;
}

Graph parse_graph(std::string_view text) {
  const auto tok = tokens(text);
  if (tok.size() < 2) throw ParseError("graph header 'v e' missing");
  Graph g;
  g.vertices = parse_count(tok[0]);
  const std::size_t e = parse_count(tok[1]);
  if (tok.size() != 2 + 2 * e)
    throw ParseError("expected " + std::to_string(e) + " edges");
  for (std::size_t i = 0; i < e; ++i) {
    const std::size_t u = parse_count(tok[2 + 2 * i]), w = parse_count(tok[3 + 2 * i]);
    if (u >= g.vertices || w >= g.vertices) throw ParseError("edge endpoint out of range");
    g.edges.emplace_back(u, w);
  }
  return g;
}

std::string format_matrix(const QMatrix& m) {
  std::ostringstream out;
  out << m.rows() << " " << m.cols() << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c).get_str();
    out << "\n";
  }
  return out.str();
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertices << " " << g.edges.size() << "\n";
  for (const auto& [u, w] : g.edges) out << u << " " << w << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace zonotopal
