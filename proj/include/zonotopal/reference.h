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

#ifndef ZONOTOPAL_REFERENCE_H_
#define ZONOTOPAL_REFERENCE_H_

// Serial reference versions of the OpenMP kernels. Same contracts as the
// parallel entry points; kept for cross-testing and benchmarking.

#include <cstdint>
#include <vector>

#include "zonotopal/config_matroid.h"
#include "zonotopal/graph.h"
#include "zonotopal/power_ideal.h"
#include "zonotopal/reconstruction.h"
#include "zonotopal/zonotope.h"

namespace zonotopal::reference {

// One Bareiss rank per subset.
std::vector<std::uint8_t> subset_rank_table(const VectorConfig& c, std::size_t max_m = 20);
TuttePoly tutte(const VectorConfig& c, std::size_t max_m = 20);

std::uint64_t lattice_count(const Zonotope& z, bool strict, std::uint64_t max_box = 1'000'000);

// Stops at the first vanishing degree and checks one more.
GradedSeries hilbert_series(const IdealPresentation& p, HilbertLimits limits = {});

std::uint64_t count_forests(const Graph& g, std::size_t max_edges = 20);
std::uint64_t count_spanning_trees(const Graph& g, std::size_t max_edges = 20);

Reconstruction reconstruct(const LengthOracle& oracle, const ReconstructOptions& opts = {});

}  // namespace zonotopal::reference

#endif  // ZONOTOPAL_REFERENCE_H_
