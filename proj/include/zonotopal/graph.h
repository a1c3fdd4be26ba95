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

#ifndef ZONOTOPAL_GRAPH_H_
#define ZONOTOPAL_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "zonotopal/qmatrix.h"

namespace zonotopal {

// Multigraph on vertices 0..v-1. Parallel edges and self-loops allowed.
struct Graph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Component label per vertex; labels are the smallest vertex of each
// component.
std::vector<std::size_t> components(const Graph& g);
std::size_t component_count(const Graph& g);

// Edges oriented from the smaller to the larger endpoint, -1 at the source
// and +1 at the target; the row of the smallest vertex of each component is
// dropped. Self-loops give zero columns.
QMatrix incidence_matrix(const Graph& g);

// Same with explicit conventions: edge e reversed when reversed[e], and the
// rows of `dropped` removed (exactly one vertex per component).
QMatrix incidence_matrix(const Graph& g, const std::vector<bool>& reversed,
                         const std::vector<std::size_t>& dropped);

// Exhaustive over edge subsets. Throw GuardExceeded past max_edges.
std::uint64_t count_forests(const Graph& g, std::size_t max_edges = 20);
std::uint64_t count_spanning_trees(const Graph& g, std::size_t max_edges = 20);

// Acyclic edge subset test used by both counters.
bool is_forest(const Graph& g, std::uint32_t edge_set);

}  // namespace zonotopal

#endif  // ZONOTOPAL_GRAPH_H_
