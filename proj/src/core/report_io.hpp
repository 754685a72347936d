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

#ifndef DIRRICCI_CORE_REPORT_IO_HPP
#define DIRRICCI_CORE_REPORT_IO_HPP

#include <string>

#include <json.hpp>

#include "core/curvature.hpp"
#include "core/measure.hpp"
#include "core/transport.hpp"

namespace dirricci {

// "u,v,kappa_num,kappa_den,kappa_decimal" rows in ascending edge order; the
// decimal column is a convenience only, comparisons use the exact pair.
std::string report_to_csv(const CurvatureReport& report);

nlohmann::json report_to_json(const CurvatureReport& report);

nlohmann::json verdict_to_json(const ConditionVerdict& verdict);

// Flatness rendered in the same {condition, holds, witnesses} shape; the
// witnesses are the edges with nonzero curvature.
nlohmann::json flatness_to_json(const CurvatureReport& report);

nlohmann::json measure_to_json(const SparseMeasure& measure);

nlohmann::json transport_to_json(const TransportResult& result);

}  // namespace dirricci

#endif  // DIRRICCI_CORE_REPORT_IO_HPP
