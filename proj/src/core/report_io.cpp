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

#include "core/report_io.hpp"

#include <sstream>

namespace dirricci {

std::string report_to_csv(const CurvatureReport& report) {
  std::ostringstream out;
  out << "u,v,kappa_num,kappa_den,kappa_decimal\n";
  for (const auto& [edge, kappa] : report.per_edge) {
    out << edge.first << "," << edge.second << "," << numerator(kappa) << ","
        << denominator(kappa) << "," << rational_to_double(kappa) << "\n";
  }
  return out.str();
}

nlohmann::json report_to_json(const CurvatureReport& report) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [edge, kappa] : report.per_edge) {
    edges.push_back({{"u", edge.first},
                     {"v", edge.second},
                     {"kappa", rational_to_string(kappa)},
                     {"kappa_decimal", rational_to_double(kappa)}});
  }
  nlohmann::json doc;
  doc["edges"] = std::move(edges);
  doc["min"] = rational_to_string(report.min);
  doc["max"] = rational_to_string(report.max);
  doc["is_constant"] = report.is_constant;
  doc["constant_value"] = report.constant_value
                              ? nlohmann::json(rational_to_string(
                                    *report.constant_value))
                              : nlohmann::json(nullptr);
  doc["is_ricci_flat"] = report.is_ricci_flat;
  return doc;
}

nlohmann::json verdict_to_json(const ConditionVerdict& verdict) {
  nlohmann::json doc;
  doc["condition"] = condition_label(verdict.condition);
  doc["holds"] = verdict.holds;
  doc["witnesses"] = verdict.witnesses;
  return doc;
}

nlohmann::json flatness_to_json(const CurvatureReport& report) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& [edge, kappa] : report.per_edge) {
    if (kappa != 0) {
      witnesses.push_back({edge.first, edge.second});
    }
  }
  nlohmann::json doc;
  doc["condition"] = "Flat";
  doc["holds"] = report.is_ricci_flat;
  doc["witnesses"] = std::move(witnesses);
  return doc;
}

nlohmann::json measure_to_json(const SparseMeasure& measure) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [vertex, mass] : measure.entries()) {
    entries.push_back({{"vertex", vertex}, {"mass", mass.str()}});
  }
  return entries;
}

nlohmann::json transport_to_json(const TransportResult& result) {
  nlohmann::json coupling = nlohmann::json::array();
  for (const auto& [pair, mass] : result.coupling.flows) {
    coupling.push_back(
        {{"from", pair.first}, {"to", pair.second}, {"mass", mass.str()}});
  }
  nlohmann::json potential = nlohmann::json::array();
  for (const auto& [vertex, value] : result.potential.values) {
    potential.push_back({{"vertex", vertex}, {"value", value.str()}});
  }
  nlohmann::json doc;
  doc["value"] = result.value.str();
  doc["coupling"] = std::move(coupling);
  doc["potential"] = std::move(potential);
  return doc;
}

}  // namespace dirricci
