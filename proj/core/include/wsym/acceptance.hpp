// Copyright 2026 The wsym Authors
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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace wsym {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string summary;  // one line, the measured quantity against its threshold
  double seconds = 0.0;
  nlohmann::json data;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20260416;
  std::vector<int> only;  // empty: every criterion
  // Called after each criterion, e.g. to stream progress.
  std::function<void(const CriterionResult&)> on_result;
};

int acceptance_count();
std::string acceptance_name(int id);
CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

// "[PASS] 07 membership modes agree ... | detail"
std::string format_result(const CriterionResult& r);

}  // namespace wsym
