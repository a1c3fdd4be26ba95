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

#include "zonotopal/corpus.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zonotopal/config_matroid.h"
#include "zonotopal/errors.h"

namespace zonotopal::corpus {

Rational random_entry(Rng& rng, bool allow_fractions) {
  if (allow_fractions && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
    const int q = std::uniform_int_distribution<int>(2, 3)(rng);
    const int p = std::uniform_int_distribution<int>(-3 * q, 3 * q)(rng);
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  return std::uniform_int_distribution<int>(-3, 3)(rng);
}

QMatrix random_matrix(Rng& rng, std::size_t n, std::size_t m, bool allow_fractions,
                      bool allow_zero_columns) {
  if (n > m) throw std::invalid_argument("random_matrix: more rows than columns");
  while (true) {
    QMatrix a(n, m);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < m; ++c) a(r, c) = random_entry(rng, allow_fractions);
    if (!allow_zero_columns) {
      bool zero = false;
      for (std::size_t c = 0; c < m && !zero; ++c) zero = is_zero(a.column(c));
      if (zero) continue;
    }
    if (rank(a) == n) return a;
  }
}

QMatrix random_matrix(Rng& rng, const MatrixShape& shape) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, shape.max_n)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(n, shape.max_m)(rng);
  return random_matrix(rng, n, m, shape.allow_fractions, shape.allow_zero_columns);
}

QMatrix random_invertible(Rng& rng, std::size_t n) {
  while (true) {
    QMatrix g(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) g(r, c) = random_entry(rng);
    if (det(g) != 0) return g;
  }
}

QMatrix apply(const QMatrix& a, const ZWitness& w) {
  const QMatrix ga = w.g * a;
  QMatrix out(ga.rows(), ga.cols());
  for (std::size_t j = 0; j < ga.cols(); ++j)
    for (std::size_t r = 0; r < ga.rows(); ++r) out(r, j) = w.scales[j] * ga(r, w.perm[j]);
  return out;
}

std::pair<QMatrix, ZWitness> random_z_move(Rng& rng, const QMatrix& a) {
  ZWitness w;
  w.g = random_invertible(rng, a.rows());
  w.perm.resize(a.cols());
  std::iota(w.perm.begin(), w.perm.end(), std::size_t{0});
  std::shuffle(w.perm.begin(), w.perm.end(), rng);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Rational s = 0;
    while (s == 0) s = random_entry(rng);
    w.scales.push_back(s);
  }
  return {apply(a, w), std::move(w)};
}

Graph random_graph(Rng& rng, const GraphShape& shape) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (true) {
    Graph g;
    g.vertices = std::uniform_int_distribution<std::size_t>(2, shape.max_vertices)(rng);
    const std::size_t e = std::uniform_int_distribution<std::size_t>(1, shape.max_edges)(rng);
    std::uniform_int_distribution<std::size_t> vertex(0, g.vertices - 1);
    bool proper = false;
    for (std::size_t i = 0; i < e; ++i) {
      std::size_t u = vertex(rng), w = vertex(rng);
      if (u == w && coin(rng) >= shape.loop_probability) {
        w = (u + 1 + vertex(rng) % (g.vertices - 1)) % g.vertices;
      }
      proper = proper || u != w;
      g.edges.emplace_back(std::min(u, w), std::max(u, w));
    }
    if (proper) return g;
  }
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

QMatrix random_bridge_free(Rng& rng, std::size_t n, std::size_t m) {
  if (m <= n) throw std::invalid_argument("a bridge-free matrix needs m > n");
  while (true) {
    QMatrix core = random_matrix(rng, n, m, true, true);
    if (bridge_columns(VectorConfig(core)).empty()) return core;
  }
}

PlantedBridges plant_bridges(Rng& rng, const QMatrix& core, std::size_t bridges) {
  const std::size_t core_n = core.rows(), core_m = core.cols();
  const std::size_t n = core_n + bridges, m = core_m + bridges;
  QMatrix block(n, m);
  for (std::size_t r = 0; r < core_n; ++r)
    for (std::size_t c = 0; c < core_m; ++c) block(r, c) = core(r, c);
  for (std::size_t i = 0; i < bridges; ++i) block(core_n + i, core_m + i) = 1;
  auto [moved, w] = random_z_move(rng, block);
  PlantedBridges out{std::move(moved), core, {}};
  for (std::size_t j = 0; j < m; ++j)
    if (w.perm[j] >= core_m) out.bridges.push_back(j);
  return out;
}

PlantedBridges planted_bridges(Rng& rng, std::size_t core_n, std::size_t core_m,
                               std::size_t bridges) {
  return plant_bridges(rng, random_bridge_free(rng, core_n, core_m), bridges);
}

}  // namespace zonotopal::corpus
