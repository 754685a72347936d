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

#ifndef DIRRICCI_CORE_VERIFY_HPP
#define DIRRICCI_CORE_VERIFY_HPP

#include <string>
#include <vector>

namespace dirricci {

// Built-in fixtures over the closed-form families: exact adjacency of the
// documented tournaments, flatness of directed cycles and cycle products,
// the tree curvature formula, and the tournament curvature value sets.
// The even-tournament value set is documented with a known discrepancy
// (K_4 attains 0); a set mismatch there is a WARN, not a failure.
struct FixtureResult {
  enum class Status { kPass, kWarn, kFail };
  std::string name;
  Status status = Status::kPass;
  std::string detail;
};

std::vector<FixtureResult> run_builtin_fixtures();

// One "PASS|WARN|FAIL name: detail" line per fixture plus a summary line.
std::string fixtures_to_text(const std::vector<FixtureResult>& results);

}  // namespace dirricci

#endif  // DIRRICCI_CORE_VERIFY_HPP
