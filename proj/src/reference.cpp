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

#include "zonotopal/reference.h"

#include "combinatorics.h"
#include "internal.h"
#include "zonotopal/errors.h"

namespace zonotopal::reference {

std::vector<std::uint8_t> subset_rank_table(const VectorConfig& c, std::size_t max_m) {
  if (c.m() > max_m || c.m() > 30) throw GuardExceeded("too many columns for a rank table");
  std::vector<std::uint8_t> table(std::size_t{1} << c.m());
  std::vector<std::size_t> picked;
  for (std::size_t s = 0; s < table.size(); ++s) {
    picked.clear();
    for (std::size_t i = 0; i < c.m(); ++i)
      if (s >> i & 1) picked.push_back(i);
    table[s] = static_cast<std::uint8_t>(rank(c.matrix().select_columns(picked)));
  }
  return table;
}

TuttePoly tutte(const VectorConfig& c, std::size_t max_m) {
  if (c.m() > max_m) throw GuardExceeded("tutte: too many columns");
  return detail::tutte_from_rank_table(reference::subset_rank_table(c, max_m), c.m());
}

std::uint64_t lattice_count(const Zonotope& z, bool strict, std::uint64_t max_box) {
  const auto plan = detail::make_scan_plan(z, max_box);
  std::vector<long long> p(plan.lo);
  std::uint64_t count = 0;
  while (true) {
    if (plan.inside(p.data(), strict)) ++count;
    std::size_t j = 0;
    while (j < plan.n && ++p[j] == plan.lo[j] + plan.width[j]) {
      p[j] = plan.lo[j];
      ++j;
    }
    if (j == plan.n) break;
  }
  return count;
}

GradedSeries hilbert_series(const IdealPresentation& p, HilbertLimits limits) {
  if (p.unit_ideal) return {};
  if (p.n == 0) return {{Integer(1)}};
  if (p.n > limits.max_variables) throw GuardExceeded("hilbert: too many variables");
  if (detail::binomial(p.n + p.m, p.m + 1) > limits.max_monomials)
    throw GuardExceeded("hilbert: degree slices too large");
  GradedSeries s;
  for (std::size_t d = 0; d <= p.m + 1; ++d) {
    const Integer h = hilbert_function(p, d);
    if (h == 0) {
      if (hilbert_function(p, d + 1) != 0)
        throw DegreeBoundViolated("hilbert function nonzero after vanishing");
      return s;
    }
    s.coeffs.push_back(h);
  }
  throw DegreeBoundViolated("hilbert function nonzero in degree m + 1");
}

std::uint64_t count_forests(const Graph& g, std::size_t max_edges) {
  if (g.edges.size() > max_edges || g.edges.size() > 30) throw GuardExceeded("too many edges");
  std::uint64_t count = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << g.edges.size()); ++s)
    count += is_forest(g, s);
  return count;
}

std::uint64_t count_spanning_trees(const Graph& g, std::size_t max_edges) {
  if (g.edges.size() > max_edges || g.edges.size() > 30) throw GuardExceeded("too many edges");
  const int size = static_cast<int>(g.vertices - component_count(g));
  std::uint64_t count = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << g.edges.size()); ++s)
    count += detail::popcount(s) == size && is_forest(g, s);
  return count;
}

Reconstruction reconstruct(const LengthOracle& oracle, const ReconstructOptions& opts) {
  Reconstruction r;
  r.candidates = candidate_set(ratio_set(oracle), oracle.generator_count());
  const auto& cands = r.candidates.candidates;
  for (std::size_t i = 0; i < cands.size(); ++i)
    r.cumulative.push_back(cumulative_multiplicity(oracle, cands[i], opts, i));
  r.columns = invert_cumulative(cands, r.cumulative);
  return r;
}

}  // namespace zonotopal::reference
