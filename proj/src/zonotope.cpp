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

#include <set>

#include "combinatorics.h"
#include "internal.h"
#include "zonotopal/errors.h"

namespace zonotopal {

using detail::first_combination;
using detail::next_combination;

namespace {

FacetDatum make_facet(const VectorConfig& c, IntVector normal) {
  const Vector eta = to_rational(normal);
  FacetDatum f{std::move(normal), 0, 0};
  for (const auto& y : c.columns()) {
    const Rational v = dot(eta, y);
    if (v != 0) ++f.multiplicity;
    if (v > 0) f.support_value += v;
  }
  return f;
}

IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

std::vector<FacetDatum> Zonotope::unoriented() const {
  std::vector<FacetDatum> out;
  for (const auto& f : facets) {
    if (canonical_primitive(std::span<const Integer>(f.normal)) == f.normal) out.push_back(f);
  }
  return out;
}

Zonotope facet_data(const VectorConfig& c) {
  if (c.n() == 0) throw SizeMismatch("facet_data needs n >= 1");
  std::set<IntVector> classes;
  if (c.n() == 1) {
    classes.insert(IntVector{1});
  } else {
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < c.m(); ++i)
      if (!c.is_loop(i)) nonzero.push_back(i);
    const std::size_t k = c.n() - 1;
    auto pick = first_combination(k);
    do {
      std::vector<Vector> span_rows;
      for (auto idx : pick) span_rows.push_back(c.column(nonzero[idx]));
      const QMatrix spanning = QMatrix::from_rows(span_rows);
      if (rank(spanning) != k) continue;
      const auto normals = nullspace(spanning);
      classes.insert(canonical_primitive(std::span<const Rational>(normals.front())));
    } while (next_combination(pick, nonzero.size()));
  }
  Zonotope z{c, {}};
  for (const auto& eta : classes) {
    z.facets.push_back(make_facet(c, eta));
    z.facets.push_back(make_facet(c, negated(eta)));
  }
  return z;
}

bool contains(const Zonotope& z, std::span<const Rational> point, bool strict) {
  if (point.size() != z.config.n()) throw SizeMismatch("point dimension");
  for (const auto& f : z.facets) {
    const Rational v = dot(to_rational(f.normal), point);
    if (strict ? v >= f.support_value : v > f.support_value) return false;
  }
  return true;
}

namespace detail {

ScanPlan make_scan_plan(const Zonotope& z, std::uint64_t max_box) {
  const VectorConfig& c = z.config;
  if (!c.matrix().is_integral()) throw NonIntegerColumns();
  const Integer kCoordLimit = Integer(1) << 28;
  const Integer kSupportLimit = Integer(1) << 60;
  if (c.n() > 64) throw GuardExceeded("lattice scan: dimension too large");
  ScanPlan plan;
  plan.n = c.n();
  for (std::size_t j = 0; j < c.n(); ++j) {
    Integer lo = 0, hi = 0;
    for (const auto& y : c.columns()) {
      const Integer v = y[j].get_num();
      if (v < 0) lo += v;
      else hi += v;
    }
    if (abs(lo) > kCoordLimit || abs(hi) > kCoordLimit)
      throw GuardExceeded("lattice scan: coordinates too large");
    const long long width = hi.get_si() - lo.get_si() + 1;
    plan.lo.push_back(lo.get_si());
    plan.width.push_back(width);
    if (plan.box > max_box / static_cast<std::uint64_t>(width))
      throw GuardExceeded("lattice scan: bounding box too large");
    plan.box *= static_cast<std::uint64_t>(width);
  }
  if (plan.box > max_box) throw GuardExceeded("lattice scan: bounding box too large");
  for (const auto& f : z.facets) {
    for (const auto& x : f.normal) {
      if (abs(x) > kCoordLimit) throw GuardExceeded("lattice scan: normal too large");
      plan.normals.push_back(x.get_si());
    }
    // Integral columns and normals give an integral support value.
    const Integer s = f.support_value.get_num();
    if (abs(s) > kSupportLimit) throw GuardExceeded("lattice scan: support too large");
    plan.supports.push_back(s.get_si());
  }
  return plan;
}

}  // namespace detail

LatticePoints lattice_points(const Zonotope& z, bool collect, std::uint64_t max_box) {
  const auto plan = detail::make_scan_plan(z, max_box);
  const std::size_t n = plan.n;
  const long long box = static_cast<long long>(plan.box);
  LatticePoints out;
  if (!collect) {
    std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count)
    for (long long idx = 0; idx < box; ++idx) {
      long long p[64];
      plan.decode(static_cast<std::uint64_t>(idx), p);
      if (plan.inside(p, false)) ++count;
    }
    out.count = count;
    return out;
  }
  std::vector<char> member(plan.box, 0);
#pragma omp parallel for
  for (long long idx = 0; idx < box; ++idx) {
    long long p[64];
    plan.decode(static_cast<std::uint64_t>(idx), p);
    member[idx] = plan.inside(p, false);
  }
  for (long long idx = 0; idx < box; ++idx) {
    if (!member[idx]) continue;
    std::vector<long long> p(n);
    plan.decode(static_cast<std::uint64_t>(idx), p.data());
    out.points.push_back(std::move(p));
  }
  out.count = out.points.size();
  return out;
}

std::uint64_t interior_lattice_points(const Zonotope& z, std::uint64_t max_box) {
  const auto plan = detail::make_scan_plan(z, max_box);
  const long long box = static_cast<long long>(plan.box);
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count)
  for (long long idx = 0; idx < box; ++idx) {
    long long p[64];
    plan.decode(static_cast<std::uint64_t>(idx), p);
    if (plan.inside(p, true)) ++count;
  }
  return count;
}

Rational volume(const VectorConfig& c, std::size_t max_m) {
  if (c.m() > max_m) throw GuardExceeded("volume: too many columns");
  Rational total = 0;
  auto pick = first_combination(c.n());
  do {
    total += abs(det(c.matrix().select_columns(pick)));
  } while (c.n() > 0 && next_combination(pick, c.m()));
  return total;
}

}  // namespace zonotopal
