// Copyright 2026 The grassembed Authors
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

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grassembed/grassmann.hpp"
#include "grassembed/semilinear.hpp"

// Plain-text formats. Blank lines and lines starting with '#' are ignored
// on input; parse failures raise ParseError with the 1-based line.
//
//   Matrix          GF(p^e;...)
//                   q rows cols
//                   <rows of element codes>
//   SemilinearMap   GF(...) n          source field and dimension
//                   GF(...) n'         target field and dimension
//                   sigma g            image of the source generator
//                   <n rows of n' codes>
//   PointMap        GF(...) n
//                   GF(...) n'
//                   i j                one line per point, sorted by i
//   GrassmannMap    q n k q' n' k'
//                   GF(...)            domain field
//                   GF(...)            codomain field
//                   i j                one line per vertex, sorted by i
//   Edge list       GF(...)
//                   n k vertices edges
//                   i j                i < j, sorted

namespace grassembed {

std::string write_matrix(const Matrix& m);
Matrix read_matrix(std::string_view text);

std::string write_semilinear(const SemilinearMap& l);
SemilinearMap read_semilinear(std::string_view text);

std::string write_point_map(const PointMap& g);
PointMap read_point_map(std::string_view text);

std::string write_grassmann_map(const GrassmannMap& f);
GrassmannMap read_grassmann_map(std::string_view text);

enum class GraphFormat { EdgeList, Dot };
// "edge-list" or "dot"; Error otherwise.
GraphFormat parse_graph_format(std::string_view name);
std::string export_graph(const GrassmannGraph& g, GraphFormat format);

struct EdgeList {
  Field field;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t vertices = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
};
EdgeList read_edge_list(std::string_view text);

// Whole-file helpers; Error when the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace grassembed
