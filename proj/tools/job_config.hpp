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
#include <optional>
#include <string>

#include <json.hpp>

#include "wsym/grid.hpp"
#include "wsym/order_function.hpp"

namespace wsym::cli {

// Effective configuration of one run: the config file merged with command line overrides.
struct JobConfig {
  std::string command;
  nlohmann::json body = nlohmann::json::object();
  std::string base_dir = ".";  // relative paths in the body resolve against this directory
  std::uint64_t seed = 20260416;
  std::optional<GridSpec> grid;
  std::optional<double> tol;
  std::string out;

  static JobConfig load(const std::string& command, const std::string& config_path);

  // Canonical JSON of everything that influences the result.
  nlohmann::json canonical() const;
  // Hex SHA-256 of canonical().dump().
  std::string hash() const;

  GridSpec grid_or(int points) const { return grid ? *grid : GridSpec::balanced(points); }
  double tol_or(double fallback) const { return tol ? *tol : fallback; }
  int n() const { return body.value("n", 1); }
  std::string resolve(const std::string& path) const;
  const nlohmann::json& require(const char* key) const;
};

// "N" or "N,L"; a missing L picks the balanced extent.
GridSpec parse_grid(const std::string& text);

// Order functions are given either as the JSON expression tree or as a product of brackets,
// "2 <x>^1 <x*>^-4", with <x> and <x*> on E x E* and <rho> on E.
OrderFunction order_function_from(const nlohmann::json& j, int n);

// A symbol entry is a header path or a generator: {"gaussian": {"alpha", "center", "modulation"}},
// {"sum": [gaussian, ...]}, {"zero": true} or {"checkerboard": amplitude}.
GridSymbol symbol_from(const nlohmann::json& j, const JobConfig& cfg, const std::vector<GridSpec>& axes);

std::string sha256_hex(const std::string& data);

}  // namespace wsym::cli
