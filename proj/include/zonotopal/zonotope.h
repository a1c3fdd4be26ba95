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

#ifndef ZONOTOPAL_ZONOTOPE_H_
#define ZONOTOPAL_ZONOTOPE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zonotopal/config_matroid.h"
#include "zonotopal/rational.h"

namespace zonotopal {

// One oriented facet normal of Z_A. Opposite facets are separate entries.
struct FacetDatum {
  IntVector normal;          // primitive, sign kept
  std::size_t multiplicity;  // #{i : normal . y_i != 0}
  Rational support_value;    // sum_i max(0, normal . y_i)
};

// Z_A = [0, y_1] + ... + [0, y_m] described by its facet inequalities
// normal . p <= support_value.
struct Zonotope {
  VectorConfig config;
  std::vector<FacetDatum> facets;

  // One entry per +-pair, the one whose normal has a positive leading entry.
  std::vector<FacetDatum> unoriented() const;
};

Zonotope facet_data(const VectorConfig& c);

bool contains(const Zonotope& z, std::span<const Rational> point, bool strict = false);

struct LatticePoints {
  std::uint64_t count = 0;
  std::vector<std::vector<long long>> points;  // empty unless collected
};

// Box scan of the coordinate bounding box. Throws NonIntegerColumns, and
// GuardExceeded when the box has more than max_box points.
LatticePoints lattice_points(const Zonotope& z, bool collect = true,
                             std::uint64_t max_box = 1'000'000);

std::uint64_t interior_lattice_points(const Zonotope& z, std::uint64_t max_box = 1'000'000);

// Sum of |det| over all n-column subsets.
Rational volume(const VectorConfig& c, std::size_t max_m = 20);

}  // namespace zonotopal

#endif  // ZONOTOPAL_ZONOTOPE_H_
