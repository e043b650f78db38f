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

#include "wsym/report.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wsym/error.hpp"

namespace wsym {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

static_assert(sizeof(double) == 8, "64-bit doubles required");

std::uint64_t to_le(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::big) {
    std::uint64_t r = 0;
    for (int i = 0; i < 8; ++i) r |= ((v >> (8 * i)) & 0xffULL) << (8 * (7 - i));
    return r;
  }
  return v;
}

json read_header(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open header " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("malformed header " + path + ": " + e.what());
  }
}

std::string raw_name(const std::string& header_path) {
  return fs::path(header_path).filename().replace_extension(".raw").string();
}

std::string raw_path(const std::string& header_path, const json& h) {
  if (!h.contains("data") || !h["data"].is_string()) throw InputError("header lacks a data file name");
  return (fs::path(header_path).parent_path() / h["data"].get<std::string>()).string();
}

void write_header(const std::string& path, const json& h) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << h.dump(2) << "\n";
}

const json& field(const json& h, const char* key) {
  if (!h.contains(key)) throw InputError(std::string("header lacks field '") + key + "'");
  return h[key];
}

}  // namespace

json grid_to_json(const GridSpec& g) { return {{"L", g.extent}, {"N", g.points}}; }

GridSpec grid_from_json(const json& j) {
  try {
    return GridSpec(j.at("L").get<double>(), j.at("N").get<int>());
  } catch (const json::exception& e) {
    throw InputError(std::string("bad grid entry: ") + e.what());
  }
}

void write_raw(const std::string& path, const std::vector<cd>& values) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  for (const cd& v : values) {
    const double parts[2] = {v.real(), v.imag()};
    for (double d : parts) {
      std::uint64_t bits = to_le(std::bit_cast<std::uint64_t>(d));
      out.write(reinterpret_cast<const char*>(&bits), 8);
    }
  }
}

std::vector<cd> read_raw(const std::string& path, std::size_t expected) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw InputError("cannot open raw data " + path);
  const auto size = static_cast<std::size_t>(in.tellg());
  if (size != expected * 16) {
    std::ostringstream os;
    os << "raw file " << path << " holds " << size << " bytes, expected " << expected * 16;
    throw InputError(os.str());
  }
  in.seekg(0);
  std::vector<cd> values(expected);
  for (auto& v : values) {
    std::uint64_t re = 0, im = 0;
    in.read(reinterpret_cast<char*>(&re), 8);
    in.read(reinterpret_cast<char*>(&im), 8);
    v = cd(std::bit_cast<double>(to_le(re)), std::bit_cast<double>(to_le(im)));
  }
  return values;
}

void write_grid_symbol(const GridSymbol& g, const std::string& header_path) {
  json h;
  h["kind"] = "symbol";
  h["n"] = g.n;
  h["domain"] = to_string(g.domain);
  h["axes"] = json::array();
  for (const auto& a : g.axes) h["axes"].push_back(grid_to_json(a));
  h["data"] = raw_name(header_path);
  write_header(header_path, h);
  write_raw(raw_path(header_path, h), g.values);
}

GridSymbol read_grid_symbol(const std::string& header_path) {
  const json h = read_header(header_path);
  if (h.value("kind", std::string("symbol")) != "symbol") throw InputError("header does not describe a symbol");
  std::vector<GridSpec> axes;
  for (const auto& a : field(h, "axes")) axes.push_back(grid_from_json(a));
  if (axes.empty()) throw InputError("symbol header has no axes");
  const int n = field(h, "n").get<int>();
  const Domain d = h.contains("domain") ? domain_from_string(h["domain"].get<std::string>()) : Domain::PhaseSpace;
  GridSymbol g(n, axes, d);
  g.values = read_raw(raw_path(header_path, h), g.size());
  return g;
}

void write_weyl_operator(const WeylOperator& op, const std::string& header_path) {
  json h;
  h["kind"] = "operator";
  h["n"] = op.n;
  h["grid"] = grid_to_json(op.grid);
  h["rows"] = op.matrix.rows();
  h["cols"] = op.matrix.cols();
  h["data"] = raw_name(header_path);
  write_header(header_path, h);
  std::vector<cd> values(op.matrix.size());
  for (Eigen::Index i = 0; i < op.matrix.rows(); ++i)
    for (Eigen::Index j = 0; j < op.matrix.cols(); ++j) values[i * op.matrix.cols() + j] = op.matrix(i, j);
  write_raw(raw_path(header_path, h), values);
}

WeylOperator read_weyl_operator(const std::string& header_path) {
  const json h = read_header(header_path);
  if (field(h, "kind") != "operator") throw InputError("header does not describe an operator");
  WeylOperator op;
  op.n = field(h, "n").get<int>();
  op.grid = grid_from_json(field(h, "grid"));
  const auto rows = field(h, "rows").get<Eigen::Index>(), cols = field(h, "cols").get<Eigen::Index>();
  if (rows != cols) throw InputError("operator matrix must be square");
  const auto values = read_raw(raw_path(header_path, h), static_cast<std::size_t>(rows * cols));
  op.matrix.resize(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) op.matrix(i, j) = values[i * cols + j];
  op.provenance = "file:" + header_path;
  return op;
}

void write_effective_kernel(const EffectiveKernel& k, int stride, const std::string& header_path) {
  const ComplexGrid zg{k.grid(), stride};
  const std::size_t m = static_cast<std::size_t>(std::pow(zg.per_dim(), k.n()));
  WeightedGridFunction probe;
  probe.n = k.n();
  probe.grid = zg;
  std::vector<cd> values;
  values.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = k.row(probe.point(i), zg);
    values.insert(values.end(), row.begin(), row.end());
  }
  json h;
  h["kind"] = "effective_kernel";
  h["n"] = k.n();
  h["grid"] = {{"L", k.grid().extent}, {"N", k.grid().points}, {"stride", stride}};
  h["pairs"] = "x,y";
  h["shape"] = {m, m};
  h["data"] = raw_name(header_path);
  write_header(header_path, h);
  write_raw(raw_path(header_path, h), values);
}

std::string dump_json(const json& j) { return j.dump(2); }

}  // namespace wsym
