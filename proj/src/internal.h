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

#ifndef ZONOTOPAL_SRC_INTERNAL_H_
#define ZONOTOPAL_SRC_INTERNAL_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zonotopal/config_matroid.h"
#include "zonotopal/zonotope.h"

namespace zonotopal::detail {

TuttePoly tutte_from_rank_table(const std::vector<std::uint8_t>& table, std::size_t m);

// Facet inequalities and bounding box of an integral zonotope in int64 form,
// with bounds checked so that every dot product in a scan fits.
struct ScanPlan {
  std::size_t n = 0;
  std::vector<long long> normals;   // facets x n, row-major
  std::vector<long long> supports;  // one per facet
  std::vector<long long> lo, width;
  std::uint64_t box = 1;

  bool inside(const long long* p, bool strict) const {
    const std::size_t f = supports.size();
    for (std::size_t k = 0; k < f; ++k) {
      long long s = 0;
      for (std::size_t j = 0; j < n; ++j) s += normals[k * n + j] * p[j];
      if (strict ? s >= supports[k] : s > supports[k]) return false;
    }
    return true;
  }

  // Mixed-radix decode of a box index into a lattice point.
  void decode(std::uint64_t index, long long* p) const {
    for (std::size_t j = 0; j < n; ++j) {
      const auto w = static_cast<std::uint64_t>(width[j]);
      p[j] = lo[j] + static_cast<long long>(index % w);
      index /= w;
    }
  }
};

ScanPlan make_scan_plan(const Zonotope& z, std::uint64_t max_box);

}  // namespace zonotopal::detail

#endif  // ZONOTOPAL_SRC_INTERNAL_H_
