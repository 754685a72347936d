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

#include "core/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/error.hpp"

namespace dirricci {

GraphFileFormat format_from_path(std::string_view path) {
  auto dot = path.rfind('.');
  std::string_view ext = dot == std::string_view::npos ? "" : path.substr(dot);
  if (ext == ".json") return GraphFileFormat::kJson;
  if (ext == ".csv") return GraphFileFormat::kMatrixCsv;
  return GraphFileFormat::kEdgeList;
}

GraphFileFormat parse_format_name(std::string_view name) {
  if (name == "edgelist") return GraphFileFormat::kEdgeList;
  if (name == "json") return GraphFileFormat::kJson;
  if (name == "matrix") return GraphFileFormat::kMatrixCsv;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown graph format '" + std::string(name) +
                  "' (expected edgelist, json, or matrix)");
}

const char* format_name(GraphFileFormat format) {
  switch (format) {
    case GraphFileFormat::kEdgeList:
      return "edgelist";
    case GraphFileFormat::kJson:
      return "json";
    case GraphFileFormat::kMatrixCsv:
      return "matrix";
  }
  return "?";
}

namespace {

std::uint64_t parse_index(const std::string& token, std::string_view what) {
  if (token.empty() ||
      !std::all_of(token.begin(), token.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw Error(ErrorCode::kParseError,
                "expected a nonnegative integer " + std::string(what) +
                    ", got '" + token + "'");
  }
  try {
    return std::stoull(token);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError,
                "integer out of range: '" + token + "'");
  }
}

DirectedGraph parse_edge_list(std::string_view text,
                              DegreeConvention convention) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Edge> edges;
  bool have_n = false;
  std::uint64_t n = 0;
  std::uint64_t max_index = 0;
  bool any_vertex = false;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string a, b;
    if (!(fields >> a)) continue;  // blank
    if (a == "n" && !have_n && edges.empty()) {
      if (!(fields >> b)) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) +
                        ": header needs a vertex count");
      }
      n = parse_index(b, "vertex count");
      have_n = true;
    } else {
      if (!(fields >> b)) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) +
                        ": expected 'u v'");
      }
      std::uint64_t u = parse_index(a, "vertex");
      std::uint64_t v = parse_index(b, "vertex");
      edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
      max_index = std::max({max_index, u, v});
      any_vertex = true;
    }
    std::string extra;
    if (fields >> extra) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) +
                      ": trailing token '" + extra + "'");
    }
  }
  if (!have_n) n = any_vertex ? max_index + 1 : 0;
  return DirectedGraph::build(static_cast<VertexId>(n), std::move(edges),
                              convention);
}

DirectedGraph parse_json_graph(std::string_view text,
                               DegreeConvention convention) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("num_vertices") ||
      !doc.contains("edges") || !doc["num_vertices"].is_number_unsigned() ||
      !doc["edges"].is_array()) {
    throw Error(ErrorCode::kParseError,
                "expected {\"num_vertices\": n, \"edges\": [[u, v], ...]}");
  }
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      throw Error(ErrorCode::kParseError,
                  "each edge must be a [u, v] pair of nonnegative integers");
    }
    edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
  }
  return DirectedGraph::build(doc["num_vertices"].get<VertexId>(),
                              std::move(edges), convention);
}

DirectedGraph parse_matrix_csv(std::string_view text,
                               DegreeConvention convention) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<int> row;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) {
      // trim spaces
      cell.erase(0, cell.find_first_not_of(" \t\r"));
      cell.erase(cell.find_last_not_of(" \t\r") + 1);
      if (cell != "0" && cell != "1") {
        throw Error(ErrorCode::kParseError,
                    "adjacency entries must be 0 or 1, got '" + cell + "'");
      }
      row.push_back(cell == "1" ? 1 : 0);
    }
    rows.push_back(std::move(row));
  }
  std::size_t n = rows.size();
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw Error(ErrorCode::kParseError,
                  "adjacency matrix must be square; got a row of length " +
                      std::to_string(row.size()) + " in " +
                      std::to_string(n) + " rows");
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] == 1) {
        edges.emplace_back(static_cast<VertexId>(i),
                           static_cast<VertexId>(j));
      }
    }
  }
  return DirectedGraph::build(static_cast<VertexId>(n), std::move(edges),
                              convention);
}

}  // namespace

DirectedGraph parse_graph(std::string_view text, GraphFileFormat format,
                          DegreeConvention convention) {
  switch (format) {
    case GraphFileFormat::kEdgeList:
      return parse_edge_list(text, convention);
    case GraphFileFormat::kJson:
      return parse_json_graph(text, convention);
    case GraphFileFormat::kMatrixCsv:
      return parse_matrix_csv(text, convention);
  }
  throw Error(ErrorCode::kInvalidArgument, "unhandled graph format");
}

std::string serialize_graph(const DirectedGraph& graph,
                            GraphFileFormat format) {
  std::ostringstream out;
  switch (format) {
    case GraphFileFormat::kEdgeList: {
      out << "n " << graph.vertex_count() << "\n";
      for (const auto& [u, v] : graph.edges()) out << u << " " << v << "\n";
      break;
    }
    case GraphFileFormat::kJson: {
      nlohmann::json doc;
      doc["num_vertices"] = graph.vertex_count();
      doc["edges"] = nlohmann::json::array();
      for (const auto& [u, v] : graph.edges()) {
        doc["edges"].push_back({u, v});
      }
      out << doc.dump(2) << "\n";
      break;
    }
    case GraphFileFormat::kMatrixCsv: {
      VertexId n = graph.vertex_count();
      for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = 0; j < n; ++j) {
          if (j > 0) out << ",";
          out << (graph.has_edge(i, j) ? 1 : 0);
        }
        out << "\n";
      }
      break;
    }
  }
  return out.str();
}

DirectedGraph load_graph_file(const std::string& path, GraphFileFormat format,
                              DegreeConvention convention) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), format, convention);
}

void save_graph_file(const DirectedGraph& graph, const std::string& path,
                     GraphFileFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot open '" + path + "' for writing");
  }
  out << serialize_graph(graph, format);
  if (!out) {
    throw Error(ErrorCode::kIoError, "failed writing '" + path + "'");
  }
}

}  // namespace dirricci
