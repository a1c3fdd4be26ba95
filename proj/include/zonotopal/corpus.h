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

#ifndef ZONOTOPAL_CORPUS_H_
#define ZONOTOPAL_CORPUS_H_

// Seeded random instances for property checks and the verify suite.

#include <cstddef>
#include <cstdint>
#include <random>

#include "zonotopal/graph.h"
#include "zonotopal/qmatrix.h"
#include "zonotopal/zequiv.h"

namespace zonotopal::corpus {

using Rng = std::mt19937_64;

// Entry in [-3, 3]: an integer, or with probability 1/4 a fraction p/q with
// q in {2, 3}.
Rational random_entry(Rng& rng, bool allow_fractions = true);

struct MatrixShape {
  std::size_t max_n = 3;
  std::size_t max_m = 6;
  bool allow_fractions = true;
  bool allow_zero_columns = true;
};

// Full-row-rank matrix with 1 <= n <= max_n and n <= m <= max_m.
QMatrix random_matrix(Rng& rng, const MatrixShape& shape = {});
QMatrix random_matrix(Rng& rng, std::size_t n, std::size_t m, bool allow_fractions,
                      bool allow_zero_columns);

QMatrix random_invertible(Rng& rng, std::size_t n);

// A2 = g * A * P * D for random g, permutation and nonzero scales, together
// with the witness that produced it.
std::pair<QMatrix, ZWitness> random_z_move(Rng& rng, const QMatrix& a);
QMatrix apply(const QMatrix& a, const ZWitness& w);

struct GraphShape {
  std::size_t max_vertices = 6;
  std::size_t max_edges = 9;
  double loop_probability = 0.0;
};

// At least one non-loop edge.
Graph random_graph(Rng& rng, const GraphShape& shape = {});
bool is_connected(const Graph& g);

// [[B, 0], [0, I_k]] under a random z-move. Bridges are reported in the
// column order of the result.
struct PlantedBridges {
  QMatrix matrix;
  QMatrix core;  // B, bridge-free
  std::vector<std::size_t> bridges;
};
PlantedBridges planted_bridges(Rng& rng, std::size_t core_n, std::size_t core_m,
                               std::size_t bridges);
PlantedBridges plant_bridges(Rng& rng, const QMatrix& core, std::size_t bridges);

// Full-row-rank matrix without coloops; needs m > n.
QMatrix random_bridge_free(Rng& rng, std::size_t n, std::size_t m);

}  // namespace zonotopal::corpus

#endif  // ZONOTOPAL_CORPUS_H_
