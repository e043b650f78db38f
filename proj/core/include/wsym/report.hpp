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

#include <string>

#include <json.hpp>

#include "wsym/bargmann.hpp"
#include "wsym/grid.hpp"
#include "wsym/quantize.hpp"

namespace wsym {

// File format of sampled data: a JSON header next to a raw file of interleaved 64-bit IEEE
// little-endian (real, imaginary) pairs in row-major order. The header names the raw file
// relative to its own directory in the "data" field.
//
//   symbol:   {"kind": "symbol", "n": 1, "domain": "E", "axes": [{"L": .., "N": ..}, ..]}
//   operator: {"kind": "operator", "n": 1, "grid": {"L": .., "N": ..}, "rows": R, "cols": C}
//   kernel:   {"kind": "effective_kernel", "n": 1, "grid": {"L", "N", "stride"}, "pairs": "x,y"}

void write_grid_symbol(const GridSymbol& g, const std::string& header_path);
GridSymbol read_grid_symbol(const std::string& header_path);

void write_weyl_operator(const WeylOperator& op, const std::string& header_path);
WeylOperator read_weyl_operator(const std::string& header_path);

// K^eff(x, y) for x and y on the same coarse complex grid, x outer and y inner.
void write_effective_kernel(const EffectiveKernel& k, int stride, const std::string& header_path);

// Raw interleaved little-endian complex data.
void write_raw(const std::string& path, const std::vector<cd>& values);
std::vector<cd> read_raw(const std::string& path, std::size_t expected);

nlohmann::json grid_to_json(const GridSpec& g);
GridSpec grid_from_json(const nlohmann::json& j);

// Key-sorted serialization with two-space indentation; identical inputs give identical bytes.
std::string dump_json(const nlohmann::json& j);

}  // namespace wsym
