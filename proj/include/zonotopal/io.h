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

#ifndef ZONOTOPAL_IO_H_
#define ZONOTOPAL_IO_H_

#include <string>
#include <string_view>

#include "zonotopal/graph.h"
#include "zonotopal/qmatrix.h"

namespace zonotopal {

// Matrix text: "n m" then n rows of m rationals. Graph text: "v e" then e
// lines "u w" (0-based). Lines starting with '#' are ignored. Throw
// ParseError.
QMatrix parse_matrix(std::string_view text);
Graph parse_graph(std::string_view text);

std::string format_matrix(const QMatrix& m);
std::string format_graph(const Graph& g);

// Throws ParseError when the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace zonotopal

#endif  // ZONOTOPAL_IO_H_
