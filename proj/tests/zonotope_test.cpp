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

#include "zonotopal/zonotope.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "zonotopal/corpus.h"
#include "zonotopal/errors.h"
#include "zonotopal/reference.h"

namespace zonotopal {
namespace {

const QMatrix kTriangleA{{-1, 0, 1, 1}, {0, -1, -1, -1}};

// Membership by basic feasible solutions of {A l = p, 0 <= l <= 1}: pick n
// independent columns, fix the others at 0 or 1, solve for the rest.
bool member_oracle(const QMatrix& a, const Vector& p) {
  const std::size_t n = a.rows(), m = a.cols();
  for (std::uint32_t basis = 0; basis < (1u << m); ++basis) {
    if (static_cast<std::size_t>(__builtin_popcount(basis)) != n) continue;
    std::vector<std::size_t> bcols, rest;
    for (std::size_t j = 0; j < m; ++j) (basis >> j & 1 ? bcols : rest).push_back(j);
    const auto inv = inverse(a.select_columns(bcols));
    if (!inv) continue;
    for (std::uint32_t fixed = 0; fixed < (1u << rest.size()); ++fixed) {
      Vector rhs = p;
      for (std::size_t r = 0; r < rest.size(); ++r)
        if (fixed >> r & 1)
          for (std::size_t i = 0; i < n; ++i) rhs[i] -= a(i, rest[r]);
      const Vector l = *inv * rhs;
      if (std::all_of(l.begin(), l.end(), [](const Rational& x) { return x >= 0 && x <= 1; }))
        return true;
    }
  }
  return false;
}

// Interior iff small steps along every coordinate direction stay inside.
bool interior_oracle(const QMatrix& a, const Vector& p) {
  const Rational delta(1, 1000);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int s : {-1, 1}) {
      Vector q = p;
      q[i] += s * delta;
      if (!member_oracle(a, q)) return false;
    }
  return true;
}

std::pair<std::uint64_t, std::uint64_t> count_by_oracle(const QMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<long> lo(n, 0), hi(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const long v = a(i, j).get_num().get_si();
      (v < 0 ? lo[i] : hi[i]) += v;
    }
  std::uint64_t all = 0, inner = 0;
  std::vector<long> p(lo);
  while (true) {
    Vector q(p.begin(), p.end());
    if (member_oracle(a, q)) {
      ++all;
      if (interior_oracle(a, q)) ++inner;
    }
    std::size_t i = 0;
    while (i < n && p[i] == hi[i]) p[i] = lo[i], ++i;
    if (i == n) break;
    ++p[i];
  }
  return {all, inner};
}

// Shoelace area of the hull of all subset sums (planar case).
Rational hull_area(const QMatrix& a) {
  std::vector<std::pair<Rational, Rational>> pts;
  for (std::uint32_t s = 0; s < (1u << a.cols()); ++s) {
    Rational x = 0, y = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (s >> j & 1) x += a(0, j), y += a(1, j);
    pts.emplace_back(x, y);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto cross = [](const auto& o, const auto& p, const auto& q) -> Rational {
    return (p.first - o.first) * (q.second - o.second) - (p.second - o.second) * (q.first - o.first);
  };
  std::vector<std::pair<Rational, Rational>> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  Rational twice = 0;
  for (std::size_t i = 0; i + 1 < k; ++i)
    twice += hull[i].first * hull[i + 1].second - hull[i + 1].first * hull[i].second;
  return abs(twice) / 2;
}

std::vector<std::pair<IntVector, std::size_t>> unoriented(const Zonotope& z) {
  std::vector<std::pair<IntVector, std::size_t>> out;
  for (const auto& f : z.unoriented()) out.emplace_back(f.normal, f.multiplicity);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(FacetData, Examples) {
  const Zonotope z = facet_data(VectorConfig(kTriangleA));
  EXPECT_EQ(unoriented(z), (std::vector<std::pair<IntVector, std::size_t>>{
                               {{0, 1}, 3}, {{1, 0}, 3}, {{1, 1}, 2}}));
  EXPECT_EQ(z.facets.size(), 6u);

  const Zonotope seg = facet_data(VectorConfig(QMatrix{{1}}));
  ASSERT_EQ(seg.facets.size(), 2u);
  for (const auto& f : seg.facets) EXPECT_EQ(f.multiplicity, 1u);

  const Zonotope square = facet_data(VectorConfig(QMatrix::identity(2)));
  EXPECT_EQ(square.facets.size(), 4u);
  for (const auto& f : square.facets) EXPECT_EQ(f.multiplicity, 1u);
}

TEST(LatticePoints, Examples) {
  const Zonotope z = facet_data(VectorConfig(kTriangleA));
  EXPECT_EQ(lattice_points(z).count, 10u);
  EXPECT_EQ(lattice_points(z).points.size(), 10u);
  EXPECT_EQ(interior_lattice_points(z), 2u);
  const Zonotope seg = facet_data(VectorConfig(QMatrix{{1}}));
  EXPECT_EQ(lattice_points(seg).count, 2u);
  EXPECT_EQ(interior_lattice_points(seg), 0u);
  const Zonotope square = facet_data(VectorConfig(QMatrix::identity(2)));
  EXPECT_EQ(lattice_points(square).count, 4u);
  EXPECT_EQ(interior_lattice_points(square), 0u);
}

TEST(LatticePoints, Guards) {
  EXPECT_THROW(lattice_points(facet_data(VectorConfig(QMatrix{{Rational(1, 2)}}))), NonIntegerColumns);
  EXPECT_THROW(lattice_points(facet_data(VectorConfig(QMatrix{{1000, 1000}})), true, 100),
               GuardExceeded);
}

TEST(Volume, Examples) {
  EXPECT_EQ(volume(VectorConfig(kTriangleA)), 5);
  EXPECT_EQ(volume(VectorConfig(QMatrix{{1}})), 1);
  EXPECT_EQ(volume(VectorConfig(QMatrix{{1, 0, 1}, {0, 1, 1}})), 3);
}

TEST(Zonotope, RandomAgainstOracles) {
  corpus::Rng rng(21);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 1 + t % 3;
    const QMatrix a = corpus::random_matrix(rng, n, n + t % 3, false, true);
    const Zonotope z = facet_data(VectorConfig(a));
    const auto [all, inner] = count_by_oracle(a);
    EXPECT_EQ(lattice_points(z, false).count, all);
    EXPECT_EQ(interior_lattice_points(z), inner);
    EXPECT_EQ(reference::lattice_count(z, false), all);
    EXPECT_EQ(reference::lattice_count(z, true), inner);
  }
}

TEST(Zonotope, PlanarVolumeMatchesHullArea) {
  corpus::Rng rng(22);
  for (int t = 0; t < 60; ++t) {
    const QMatrix a = corpus::random_matrix(rng, 2, 2 + t % 5, true, true);
    EXPECT_EQ(volume(VectorConfig(a)), hull_area(a));
  }
}

TEST(Zonotope, FacetSymmetryAndSubsetSums) {
  corpus::Rng rng(23);
  for (int t = 0; t < 80; ++t) {
    const QMatrix a = corpus::random_matrix(rng);
    const Zonotope z = facet_data(VectorConfig(a));
    ASSERT_EQ(z.facets.size() % 2, 0u);
    for (const auto& f : z.facets) {
      IntVector neg = f.normal;
      for (auto& x : neg) x = -x;
      const auto it = std::find_if(z.facets.begin(), z.facets.end(),
                                   [&](const FacetDatum& g) { return g.normal == neg; });
      ASSERT_NE(it, z.facets.end());
      EXPECT_EQ(it->multiplicity, f.multiplicity);
      Rational spread = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) spread += abs(dot(to_rational(f.normal), a.column(j)));
      EXPECT_EQ(f.support_value + it->support_value, spread);
    }
    for (std::uint32_t s = 0; s < (1u << a.cols()); ++s) {
      Vector p(a.rows(), 0);
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (s >> j & 1)
          for (std::size_t i = 0; i < a.rows(); ++i) p[i] += a(i, j);
      EXPECT_TRUE(contains(z, p));
    }
  }
}

}  // namespace
}  // namespace zonotopal
