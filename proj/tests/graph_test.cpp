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

#include <gtest/gtest.h>

#include "zonotopal/config_matroid.h"
#include "zonotopal/corpus.h"
#include "zonotopal/errors.h"
#include "zonotopal/io.h"
#include "zonotopal/power_ideal.h"
#include "zonotopal/zequiv.h"
#include "zonotopal/zonotope.h"

namespace zonotopal {
namespace {

const Graph kTriangleG{3, {{0, 1}, {0, 2}, {1, 2}, {1, 2}}};

// Acyclic iff every added edge joins two different trees (naive relabeling).
bool acyclic_oracle(const Graph& g, std::uint32_t set) {
  std::vector<std::size_t> label(g.vertices);
  for (std::size_t v = 0; v < g.vertices; ++v) label[v] = v;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!(set >> e & 1)) continue;
    const auto [u, w] = g.edges[e];
    if (label[u] == label[w]) return false;
    const std::size_t from = label[w];
    for (auto& l : label)
      if (l == from) l = label[u];
  }
  return true;
}

TEST(Incidence, Examples) {
  const QMatrix triangle_a{{-1, 0, 1, 1}, {0, -1, -1, -1}};
  EXPECT_EQ(incidence_matrix(kTriangleG), -triangle_a);
  EXPECT_EQ(incidence_matrix(Graph{2, {{0, 1}}}), (QMatrix{{1}}));
  const QMatrix empty = incidence_matrix(Graph{2, {}});
  EXPECT_EQ(empty.rows(), 0u);
  EXPECT_EQ(empty.cols(), 0u);
}

TEST(Incidence, LoopsAndComponents) {
  const Graph g{5, {{0, 1}, {1, 1}, {3, 4}}};
  const QMatrix a = incidence_matrix(g);
  EXPECT_EQ(a.rows(), 2u);  // components {0,1}, {2}, {3,4}
  EXPECT_EQ(a, (QMatrix{{1, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(component_count(g), 3u);
  EXPECT_EQ(components(g), (std::vector<std::size_t>{0, 0, 2, 3, 3}));
}

TEST(Incidence, ExplicitChoicesAreValidated) {
  EXPECT_THROW(incidence_matrix(kTriangleG, std::vector<bool>(4, false), {0, 1}), std::invalid_argument);
  EXPECT_THROW(incidence_matrix(kTriangleG, std::vector<bool>(3, false), {0}), SizeMismatch);
}

TEST(Counts, Examples) {
  EXPECT_EQ(count_forests(kTriangleG), 10u);
  EXPECT_EQ(count_spanning_trees(kTriangleG), 5u);
  const Graph edge{2, {{0, 1}}};
  EXPECT_EQ(count_forests(edge), 2u);
  EXPECT_EQ(count_spanning_trees(edge), 1u);
  const Graph triangle{3, {{0, 1}, {0, 2}, {1, 2}}};
  EXPECT_EQ(count_forests(triangle), 7u);
  EXPECT_EQ(count_spanning_trees(triangle), 3u);
  Graph big{2, {}};
  for (int i = 0; i < 21; ++i) big.edges.emplace_back(0, 1);
  EXPECT_THROW(count_forests(big), GuardExceeded);
}

TEST(Counts, RandomGraphsAgainstOracles) {
  corpus::Rng rng(71);
  corpus::GraphShape shape;
  shape.loop_probability = 0.1;
  for (int t = 0; t < 60; ++t) {
    const Graph g = corpus::random_graph(rng, shape);
    const std::size_t rank = g.vertices - component_count(g);
    std::uint64_t forests = 0, trees = 0;
    for (std::uint32_t s = 0; s < (1u << g.edges.size()); ++s) {
      const bool acyclic = acyclic_oracle(g, s);
      EXPECT_EQ(is_forest(g, s), acyclic);
      if (!acyclic) continue;
      ++forests;
      if (static_cast<std::size_t>(__builtin_popcount(s)) == rank) ++trees;
    }
    EXPECT_EQ(count_forests(g), forests);
    EXPECT_EQ(count_spanning_trees(g), trees);

    const QMatrix a = incidence_matrix(g);
    EXPECT_TRUE(is_totally_unimodular(a));
    const VectorConfig c(a);
    const TuttePoly tp = tutte(c);
    EXPECT_EQ(tutte_eval(tp, 2, 1), Rational(static_cast<long>(forests)));
    EXPECT_EQ(tutte_eval(tp, 1, 1), Rational(static_cast<long>(trees)));
    const Zonotope z = facet_data(c);
    EXPECT_EQ(lattice_points(z, false).count, forests);
    EXPECT_EQ(volume(c), Rational(static_cast<long>(trees)));
  }
}

TEST(Incidence, ConventionsGiveZEquivalentMatrices) {
  corpus::Rng rng(72);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < 30; ++t) {
    const Graph g = corpus::random_graph(rng);
    std::vector<bool> reversed(g.edges.size());
    for (std::size_t e = 0; e < reversed.size(); ++e) reversed[e] = coin(rng);
    const auto label = components(g);
    std::vector<std::size_t> dropped;
    for (std::size_t v = 0; v < g.vertices; ++v)
      if (label[v] == v) {
        std::size_t last = v;  // the largest vertex of the component
        for (std::size_t u = v; u < g.vertices; ++u)
          if (label[u] == v) last = u;
        dropped.push_back(last);
      }
    std::sort(dropped.begin(), dropped.end());
    const QMatrix a = incidence_matrix(g);
    const QMatrix b = incidence_matrix(g, reversed, dropped);
    const auto res = z_equivalent(a, b);
    ASSERT_TRUE(res.witness.has_value()) << format_graph(g);
    EXPECT_TRUE(verify_witness(a, b, *res.witness));
  }
}

TEST(GraphIo, ParseAndFormat) {
  const Graph g = parse_graph("# comment\n3 4\n0 1\n0 2\n1 2\n1 2\n");
  EXPECT_EQ(g.vertices, 3u);
  EXPECT_EQ(g.edges, kTriangleG.edges);
  EXPECT_EQ(parse_graph(format_graph(g)).edges, g.edges);
  EXPECT_THROW(parse_graph("2 1\n0 5\n"), ParseError);
  EXPECT_THROW(parse_graph("2 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("x"), ParseError);
}

TEST(MatrixIo, ParseAndFormat) {
  const QMatrix m = parse_matrix("2 2\n1 -1/2\n# skip\n0 3\n");
  EXPECT_EQ(m, (QMatrix{{1, Rational(-1, 2)}, {0, 3}}));
  EXPECT_EQ(parse_matrix(format_matrix(m)), m);
  EXPECT_THROW(parse_matrix("2 2\n1 2\n3\n"), ParseError);
  EXPECT_THROW(parse_matrix("1 1\n1/0\n"), ParseError);
  EXPECT_THROW(read_file("/nonexistent/file"), ParseError);
}

}  // namespace
}  // namespace zonotopal
