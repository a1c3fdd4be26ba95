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

#include "zonotopal/graph.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "zonotopal/errors.h"

namespace zonotopal {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // False when already joined.
  bool join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

void check_vertices(const Graph& g) {
  for (const auto& [u, w] : g.edges)
    if (u >= g.vertices || w >= g.vertices) throw IndexOutOfRange("edge endpoint out of range");
}

}  // namespace

std::vector<std::size_t> components(const Graph& g) {
  check_vertices(g);
  DisjointSets sets(g.vertices);
  for (const auto& [u, w] : g.edges) sets.join(u, w);
  std::vector<std::size_t> label(g.vertices);
  // join() keeps the smaller index as root.
  for (std::size_t v = 0; v < g.vertices; ++v) label[v] = sets.find(v);
  return label;
}

std::size_t component_count(const Graph& g) {
  const auto label = components(g);
  return std::set<std::size_t>(label.begin(), label.end()).size();
}

QMatrix incidence_matrix(const Graph& g, const std::vector<bool>& reversed,
                         const std::vector<std::size_t>& dropped) {
  if (reversed.size() != g.edges.size()) throw SizeMismatch("one orientation flag per edge");
  const auto label = components(g);
  std::set<std::size_t> dropped_set(dropped.begin(), dropped.end());
  std::set<std::size_t> covered;
  for (auto v : dropped) {
    if (v >= g.vertices) throw IndexOutOfRange("dropped vertex out of range");
    if (!covered.insert(label[v]).second) throw std::invalid_argument("two dropped rows in one component");
  }
  if (covered.size() != component_count(g)) throw std::invalid_argument("a component keeps all its rows");

  std::vector<std::size_t> kept;
  for (std::size_t v = 0; v < g.vertices; ++v)
    if (!dropped_set.count(v)) kept.push_back(v);
  std::vector<std::size_t> row_of(g.vertices, g.vertices);
  for (std::size_t r = 0; r < kept.size(); ++r) row_of[kept[r]] = r;

  QMatrix a(kept.size(), g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, w] = g.edges[e];
    if (u == w) continue;
    std::size_t source = std::min(u, w), target = std::max(u, w);
    if (reversed[e]) std::swap(source, target);
    if (row_of[source] < kept.size()) a(row_of[source], e) = -1;
    if (row_of[target] < kept.size()) a(row_of[target], e) = 1;
  }
  return a;
}

QMatrix incidence_matrix(const Graph& g) {
  const auto label = components(g);
  std::vector<std::size_t> dropped;
  for (std::size_t v = 0; v < g.vertices; ++v)
    if (label[v] == v) dropped.push_back(v);
  return incidence_matrix(g, std::vector<bool>(g.edges.size(), false), dropped);
}

bool is_forest(const Graph& g, std::uint32_t edge_set) {
  DisjointSets sets(g.vertices);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!(edge_set >> e & 1u)) continue;
    if (!sets.join(g.edges[e].first, g.edges[e].second)) return false;
  }
  return true;
}

std::uint64_t count_forests(const Graph& g, std::size_t max_edges) {
  if (g.edges.size() > max_edges || g.edges.size() > 30) throw GuardExceeded("too many edges");
  check_vertices(g);
  const long subsets = 1L << g.edges.size();
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count)
  for (long s = 0; s < subsets; ++s)
    if (is_forest(g, static_cast<std::uint32_t>(s))) ++count;
  return count;
}

std::uint64_t count_spanning_trees(const Graph& g, std::size_t max_edges) {
  if (g.edges.size() > max_edges || g.edges.size() > 30) throw GuardExceeded("too many edges");
  const int size = static_cast<int>(g.vertices - component_count(g));
  const long subsets = 1L << g.edges.size();
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count)
  for (long s = 0; s < subsets; ++s)
    if (__builtin_popcountl(s) == size && is_forest(g, static_cast<std::uint32_t>(s))) ++count;
  return count;
}

}  // namespace zonotopal
