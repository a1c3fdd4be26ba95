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

#ifndef ZONOTOPAL_ACCEPTANCE_H_
#define ZONOTOPAL_ACCEPTANCE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zonotopal::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Options {
  std::uint64_t seed = 0;
  // Instance count for every corpus criterion; each criterion's minimum
  // when absent.
  std::optional<std::size_t> corpus;
  std::string graph_fixture;   // edge file of the worked example
  std::string matrix_fixture;  // its matrix file
};

CriterionResult worked_example(const Options& opts);      // 1
CriterionResult tutte_identity(const Options& opts);     // 2
CriterionResult squarefree_model(const Options& opts);   // 3
CriterionResult lattice_and_graphs(const Options& opts); // 4
CriterionResult reconstruction(const Options& opts);     // 5
CriterionResult z_equivalence(const Options& opts);      // 6
CriterionResult unimodular(const Options& opts);         // 7
CriterionResult central_reduction(const Options& opts);  // 8

std::vector<CriterionResult> run_corpus(const Options& opts);
std::vector<CriterionResult> run_all(const Options& opts);

// "[PASS] 1 worked example (0.01 s): detail"
std::string format(const CriterionResult& r);

}  // namespace zonotopal::acceptance

#endif  // ZONOTOPAL_ACCEPTANCE_H_
