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

// Command-line front end. Everything numerical happens behind the C API in
// libdirricci; this translation unit only parses arguments and formats
// output. Exit codes: 0 success, 1 invalid input, 2 the requested quantity
// is undefined on this input (infinite distance / missing strong
// connectivity).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirricci.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUndefined = 2;

class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, const std::string& message)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

void check(drc_status status) {
  if (status == DRC_OK) return;
  std::string message = std::string(drc_status_name(status)) + ": " +
                        drc_last_error();
  throw CliError(drc_status_is_undefined(status) ? kExitUndefined
                                                 : kExitInvalid,
                 message);
}

struct GraphHandle {
  drc_graph* ptr = nullptr;
  ~GraphHandle() { drc_graph_free(ptr); }
};

struct ApiString {
  char* ptr = nullptr;
  ~ApiString() { drc_string_free(ptr); }
  std::string str() const { return ptr == nullptr ? "" : ptr; }
};

void write_output(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    throw CliError(kExitInvalid, "cannot open '" + output_path + "'");
  }
  out << text;
}

std::vector<uint32_t> parse_uint_list(const std::string& text,
                                      const std::string& what) {
  std::vector<uint32_t> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t pos = 0;
      unsigned long v = std::stoul(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      values.push_back(static_cast<uint32_t>(v));
    } catch (const std::exception&) {
      throw CliError(kExitInvalid,
                     "bad " + what + " entry '" + item + "' in '" + text +
                         "'");
    }
  }
  if (values.empty()) {
    throw CliError(kExitInvalid, what + " list is empty");
  }
  return values;
}

// Parent array "r,0,0,1,1": position = vertex, value = parent, 'r' = root.
void parse_tree_spec(const std::string& text, uint32_t* root,
                     std::vector<uint32_t>* pairs) {
  std::stringstream in(text);
  std::string item;
  uint32_t vertex = 0;
  bool have_root = false;
  while (std::getline(in, item, ',')) {
    if (item == "r") {
      if (have_root) {
        throw CliError(kExitInvalid, "tree spec has two roots");
      }
      have_root = true;
      *root = vertex;
    } else {
      try {
        size_t pos = 0;
        unsigned long v = std::stoul(item, &pos);
        if (pos != item.size()) throw std::invalid_argument(item);
        pairs->push_back(vertex);
        pairs->push_back(static_cast<uint32_t>(v));
      } catch (const std::exception&) {
        throw CliError(kExitInvalid,
                       "bad parent entry '" + item + "' (vertex index or r)");
      }
    }
    ++vertex;
  }
  if (!have_root) {
    throw CliError(kExitInvalid, "tree spec needs exactly one 'r' entry");
  }
}

void load_graph(const std::string& path, bool split_degrees, GraphHandle* g) {
  check(drc_graph_load(path.c_str(), nullptr, split_degrees ? 1 : 0,
                       &g->ptr));
}

// --- subcommand payloads -------------------------------------------------

int run_gen(const std::string& family, const std::vector<std::string>& params,
            const std::string& output_path) {
  GraphHandle g;
  auto need = [&](size_t count) {
    if (params.size() != count) {
      throw CliError(kExitInvalid,
                     "family '" + family + "' expects " +
                         std::to_string(count) + " parameter(s)");
    }
  };
  auto as_u32 = [&](const std::string& s) {
    try {
      size_t pos = 0;
      unsigned long v = std::stoul(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return static_cast<uint32_t>(v);
    } catch (const std::exception&) {
      throw CliError(kExitInvalid, "bad integer parameter '" + s + "'");
    }
  };

  if (family == "cycle") {
    need(1);
    check(drc_gen_cycle(as_u32(params[0]), &g.ptr));
  } else if (family == "complete") {
    need(1);
    check(drc_gen_complete(as_u32(params[0]), &g.ptr));
  } else if (family == "product") {
    need(2);
    check(drc_gen_cycle_product(as_u32(params[0]), as_u32(params[1]),
                                &g.ptr));
  } else if (family == "circulant") {
    need(2);
    std::vector<uint32_t> offsets = parse_uint_list(params[1], "offset");
    check(drc_gen_circulant(as_u32(params[0]), offsets.data(), offsets.size(),
                            &g.ptr));
  } else if (family == "tree") {
    need(1);
    uint32_t root = 0;
    std::vector<uint32_t> pairs;
    parse_tree_spec(params[0], &root, &pairs);
    check(drc_gen_in_tree(root, pairs.data(), pairs.size() / 2, &g.ptr));
  } else {
    throw CliError(kExitInvalid,
                   "unknown family '" + family +
                       "' (cycle, complete, product, circulant, tree)");
  }

  if (output_path.empty()) {
    ApiString text;
    check(drc_graph_format(g.ptr, "edgelist", &text.ptr));
    write_output(text.str(), "");
  } else {
    check(drc_graph_save(g.ptr, output_path.c_str(), nullptr));
  }
  if (family != "tree" && drc_graph_strongly_connected(g.ptr) == 0) {
    std::cerr << "note: generated graph is not strongly connected\n";
  }
  return kExitOk;
}

int run_distances(drc_graph* g, const std::string& format,
                  const std::string& output_path) {
  uint32_t n = drc_graph_vertex_count(g);
  std::ostringstream out;
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (uint32_t u = 0; u < n; ++u) {
      nlohmann::json row = nlohmann::json::array();
      for (uint32_t v = 0; v < n; ++v) {
        int64_t d = 0;
        check(drc_distance(g, u, v, &d));
        row.push_back(d < 0 ? nlohmann::json(nullptr) : nlohmann::json(d));
      }
      rows.push_back(std::move(row));
    }
    out << nlohmann::json{{"distances", rows}}.dump(2) << "\n";
  } else {
    const char* sep = format == "csv" ? "," : " ";
    for (uint32_t u = 0; u < n; ++u) {
      for (uint32_t v = 0; v < n; ++v) {
        int64_t d = 0;
        check(drc_distance(g, u, v, &d));
        if (v > 0) out << sep;
        if (d < 0) {
          out << "inf";
        } else {
          out << d;
        }
      }
      out << "\n";
    }
  }
  write_output(out.str(), output_path);
  return kExitOk;
}

int run_measure(drc_graph* g, uint32_t x, const std::string& alpha,
                const std::string& format, const std::string& output_path) {
  ApiString json;
  check(drc_measure_json(g, x, alpha.c_str(), &json.ptr));
  if (format == "json") {
    write_output(json.str(), output_path);
    return kExitOk;
  }
  nlohmann::json entries = nlohmann::json::parse(json.str());
  std::ostringstream out;
  for (const auto& e : entries) {
    out << e["vertex"].get<uint64_t>() << ": "
        << e["mass"].get<std::string>() << "\n";
  }
  write_output(out.str(), output_path);
  return kExitOk;
}

int run_wasserstein(drc_graph* g, uint32_t x, uint32_t y,
                    const std::string& alpha, const std::string& format,
                    const std::string& output_path) {
  ApiString json;
  check(drc_wasserstein_json(g, x, y, alpha.c_str(), &json.ptr));
  if (format == "json") {
    write_output(json.str(), output_path);
    return kExitOk;
  }
  nlohmann::json doc = nlohmann::json::parse(json.str());
  std::ostringstream out;
  out << "value: " << doc["value"].get<std::string>() << "\n";
  out << "coupling:\n";
  for (const auto& f : doc["coupling"]) {
    out << "  " << f["from"].get<uint64_t>() << " -> "
        << f["to"].get<uint64_t>() << ": " << f["mass"].get<std::string>()
        << "\n";
  }
  out << "dual potential:\n";
  for (const auto& p : doc["potential"]) {
    out << "  f(" << p["vertex"].get<uint64_t>()
        << ") = " << p["value"].get<std::string>() << "\n";
  }
  write_output(out.str(), output_path);
  return kExitOk;
}

int run_curvature(drc_graph* g, bool has_pair, uint32_t x, uint32_t y,
                  const std::string& alpha, const std::string& format,
                  const std::string& output_path) {
  if (has_pair) {
    ApiString value;
    check(drc_curvature(g, x, y, alpha.c_str(), &value.ptr));
    write_output(value.str() + "\n", output_path);
    return kExitOk;
  }
  if (format == "table") {
    ApiString json;
    check(drc_curvature_report(g, alpha.c_str(), "json", &json.ptr));
    nlohmann::json doc = nlohmann::json::parse(json.str());
    std::ostringstream out;
    for (const auto& e : doc["edges"]) {
      out << e["u"].get<uint64_t>() << " -> " << e["v"].get<uint64_t>()
          << ": " << e["kappa"].get<std::string>() << "\n";
    }
    out << "min: " << doc["min"].get<std::string>()
        << "  max: " << doc["max"].get<std::string>() << "\n";
    out << "constant: " << (doc["is_constant"].get<bool>() ? "true" : "false")
        << "  ricci_flat: "
        << (doc["is_ricci_flat"].get<bool>() ? "true" : "false") << "\n";
    write_output(out.str(), output_path);
  } else {
    ApiString text;
    check(drc_curvature_report(g, alpha.c_str(), format.c_str(), &text.ptr));
    write_output(text.str(), output_path);
  }
  return kExitOk;
}

int run_bound(drc_graph* g, uint32_t x, uint32_t y,
              const std::string& output_path) {
  ApiString value;
  check(drc_curvature_bound(g, x, y, &value.ptr));
  write_output(value.str() + "\n", output_path);
  return kExitOk;
}

int run_check(drc_graph* g, const std::string& condition,
              const std::string& format, const std::string& output_path) {
  ApiString json;
  check(drc_check_condition_json(g, condition.c_str(), &json.ptr));
  if (format == "json") {
    write_output(json.str(), output_path);
    return kExitOk;
  }
  nlohmann::json doc = nlohmann::json::parse(json.str());
  std::ostringstream out;
  if (condition == "flat") {
    out << "ricci_flat: " << (doc["holds"].get<bool>() ? "true" : "false")
        << "\n";
  } else {
    out << "condition: " << doc["condition"].get<std::string>() << "\n";
    out << "holds: " << (doc["holds"].get<bool>() ? "true" : "false") << "\n";
  }
  if (!doc["witnesses"].empty()) {
    out << "witnesses:\n";
    for (const auto& w : doc["witnesses"]) {
      out << " ";
      for (const auto& v : w) out << " " << v.get<uint64_t>();
      out << "\n";
    }
  }
  write_output(out.str(), output_path);
  return kExitOk;
}

int run_verify(const std::string& output_path) {
  ApiString report;
  int failures = 0, warnings = 0;
  check(drc_verify(&report.ptr, &failures, &warnings));
  write_output(report.str(), output_path);
  return failures == 0 ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Ricci curvature of directed graphs (lazy random walks, "
      "asymmetric optimal transport)"};
  app.require_subcommand(1);

  std::string convention = "union";
  app.add_option("--degree-convention", convention,
                 "union (reject anti-parallel pairs) or split "
                 "(d = d_in + d_out)")
      ->check(CLI::IsMember({"union", "split"}));

  std::string format = "table";
  app.add_option("-f,--format", format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  std::string output_path;
  app.add_option("-o,--output", output_path, "write output to this file");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph file");
  std::string family;
  std::vector<std::string> params;
  gen->add_option("family", family,
                  "cycle | complete | product | circulant | tree")
      ->required();
  gen->add_option("params", params,
                  "family parameters (e.g. 'cycle 5', 'product 3 4', "
                  "'circulant 7 1,2', 'tree r,0,0,1,1')");

  // graph-consuming subcommands
  std::string graph_path;
  uint32_t x = 0, y = 0;
  std::string alpha = "limit";
  std::vector<uint32_t> pair;
  std::string condition;

  auto* distances =
      app.add_subcommand("distances", "all-pairs directed hop distances");
  distances->add_option("graph", graph_path, "graph file")->required();

  auto* measure =
      app.add_subcommand("measure", "lazy-walk probability measure at x");
  measure->add_option("graph", graph_path, "graph file")->required();
  measure->add_option("x", x, "base vertex")->required();
  measure->add_option("--alpha", alpha, "laziness \"p/q\" in [0,1] or limit");

  auto* wasserstein = app.add_subcommand(
      "wasserstein", "transport distance between the walk measures of x, y");
  wasserstein->add_option("graph", graph_path, "graph file")->required();
  wasserstein->add_option("x", x, "first vertex")->required();
  wasserstein->add_option("y", y, "second vertex")->required();
  wasserstein->add_option("--alpha", alpha,
                          "laziness \"p/q\" in [0,1] or limit");

  auto* curvature = app.add_subcommand(
      "curvature", "Ricci curvature per edge, or of one pair with --pair");
  curvature->add_option("graph", graph_path, "graph file")->required();
  curvature->add_option("--pair", pair, "vertex pair x y")->expected(2);
  curvature->add_option(
      "--alpha", alpha,
      "\"p/q\" in [0,1] for the alpha-curvature; limit (default) for the "
      "alpha -> 1 limit");

  auto* bound = app.add_subcommand(
      "bound", "exact upper bound on the limit curvature of a pair");
  bound->add_option("graph", graph_path, "graph file")->required();
  bound->add_option("x", x, "first vertex")->required();
  bound->add_option("y", y, "second vertex")->required();

  auto* checkcmd =
      app.add_subcommand("check", "structural condition / flatness verdicts");
  checkcmd->add_option("graph", graph_path, "graph file")->required();
  checkcmd->add_option("--condition", condition, "a|outdeg|phi|b|flat")
      ->required()
      ->check(CLI::IsMember({"a", "outdeg", "phi", "b", "flat"}));

  auto* verify =
      app.add_subcommand("verify", "run the built-in fixture suite");

  // global options (-f, -o, --degree-convention) may follow the subcommand
  for (auto* sub : {gen, distances, measure, wasserstein, curvature, bound,
                    checkcmd, verify}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (gen->parsed()) return run_gen(family, params, output_path);
    if (verify->parsed()) return run_verify(output_path);

    GraphHandle g;
    load_graph(graph_path, convention == "split", &g);
    if (distances->parsed()) {
      return run_distances(g.ptr, format, output_path);
    }
    if (measure->parsed()) {
      return run_measure(g.ptr, x, alpha, format, output_path);
    }
    if (wasserstein->parsed()) {
      return run_wasserstein(g.ptr, x, y, alpha, format, output_path);
    }
    if (curvature->parsed()) {
      bool has_pair = !pair.empty();
      return run_curvature(g.ptr, has_pair, has_pair ? pair[0] : 0,
                           has_pair ? pair[1] : 0, alpha, format,
                           output_path);
    }
    if (bound->parsed()) return run_bound(g.ptr, x, y, output_path);
    if (checkcmd->parsed()) {
      return run_check(g.ptr, condition, format, output_path);
    }
    throw CliError(kExitInvalid, "no subcommand given");
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
