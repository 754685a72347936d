// Copyright 2026 The dirricci Authors
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

#ifndef DIRRICCI_CORE_GRAPH_IO_HPP
#define DIRRICCI_CORE_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "core/graph.hpp"

namespace dirricci {

enum class GraphFileFormat {
  kEdgeList,   // "u v" per line; '#' comments; optional "n <count>" header
  kJson,       // {"num_vertices": n, "edges": [[u, v], ...]}
  kMatrixCsv,  // n rows of n comma-separated 0/1; (i,j) = 1 iff edge (i,j)
};

// .json -> kJson, .csv -> kMatrixCsv, anything else -> kEdgeList.
GraphFileFormat format_from_path(std::string_view path);

// "edgelist" | "json" | "matrix"; throws kInvalidArgument otherwise.
GraphFileFormat parse_format_name(std::string_view name);
const char* format_name(GraphFileFormat format);

DirectedGraph parse_graph(std::string_view text, GraphFileFormat format,
                          DegreeConvention convention =
                              DegreeConvention::kUnion);

// Canonical text: fixed header/key order and ascending edges, so that
// load + re-serialize is byte-identical.
std::string serialize_graph(const DirectedGraph& graph,
                            GraphFileFormat format);

DirectedGraph load_graph_file(const std::string& path, GraphFileFormat format,
                              DegreeConvention convention =
                                  DegreeConvention::kUnion);
void save_graph_file(const DirectedGraph& graph, const std::string& path,
                     GraphFileFormat format);

}  // namespace dirricci

#endif  // DIRRICCI_CORE_GRAPH_IO_HPP
