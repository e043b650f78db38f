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

#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>

#include "wsym/error.hpp"
#include "wsym/report.hpp"

using namespace wsym;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("wsym_report_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("raw data is little-endian interleaved") {
  TempDir dir;
  write_raw(dir.file("one.raw"), {cd(1.0, -2.0)});
  std::ifstream in(dir.file("one.raw"), std::ios::binary);
  unsigned char bytes[16];
  in.read(reinterpret_cast<char*>(bytes), 16);
  REQUIRE(in.gcount() == 16);
  // 1.0 = 0x3FF0000000000000 and -2.0 = 0xC000000000000000, least significant byte first.
  for (int i = 0; i < 6; ++i) CHECK(bytes[i] == 0);
  CHECK(bytes[6] == 0xF0);
  CHECK(bytes[7] == 0x3F);
  CHECK(bytes[15] == 0xC0);

  CHECK(read_raw(dir.file("one.raw"), 1)[0] == cd(1.0, -2.0));
  CHECK_THROWS_AS(read_raw(dir.file("one.raw"), 2), InputError);
  CHECK_THROWS_AS(read_raw(dir.file("missing.raw"), 1), InputError);
}

TEST_CASE("symbol files round trip") {
  TempDir dir;
  const GridSpec g = GridSpec::balanced(8);
  const GridSymbol a = GridSymbol::sample(1, symbol_axes(g, 1), Domain::PhaseSpace, [](const Vec& x) {
    return cd(x[0], x[1] * x[1]);
  });
  write_grid_symbol(a, dir.file("a.json"));
  const GridSymbol b = read_grid_symbol(dir.file("a.json"));
  CHECK(b.n == 1);
  CHECK(b.domain == Domain::PhaseSpace);
  REQUIRE(b.same_grid(a));
  CHECK(b.values == a.values);

  // Truncating the raw file is caught by the size check.
  std::ifstream hdr(dir.file("a.json"));
  const auto h = nlohmann::json::parse(hdr);
  const fs::path raw = dir.path / h["data"].get<std::string>();
  fs::resize_file(raw, fs::file_size(raw) - 16);
  CHECK_THROWS_AS(read_grid_symbol(dir.file("a.json")), InputError);
}

TEST_CASE("operator files round trip") {
  TempDir dir;
  const GridSpec g = GridSpec::balanced(8);
  WeylOperator op;
  op.grid = g;
  op.n = 1;
  op.matrix = CMat::Random(8, 8);
  write_weyl_operator(op, dir.file("op.json"));
  const WeylOperator back = read_weyl_operator(dir.file("op.json"));
  CHECK(back.grid.matches(g));
  CHECK(back.n == 1);
  CHECK((back.matrix - op.matrix).norm() == 0.0);
}

TEST_CASE("effective kernel files") {
  TempDir dir;
  const GridSpec g = GridSpec::balanced(16);
  const BargmannSetup s = BargmannSetup::standard(1);
  const GridSymbol one = GridSymbol::sample(1, symbol_axes(g, 1), Domain::PhaseSpace, [](const Vec&) { return cd(1.0); });
  const EffectiveKernel k = effective_kernel(one, g, s);
  write_effective_kernel(k, 4, dir.file("k.json"));
  std::ifstream hdr(dir.file("k.json"));
  const auto h = nlohmann::json::parse(hdr);
  CHECK(h["kind"] == "effective_kernel");
  const ComplexGrid zg{g, 4};
  const std::size_t count = static_cast<std::size_t>(zg.per_dim()) * zg.per_dim();
  const auto values = read_raw((dir.path / h["data"].get<std::string>()).string(), count);
  CHECK(values[1] == k(CVec::Constant(1, zg.point(0)), CVec::Constant(1, zg.point(1))));
}

TEST_CASE("JSON helpers") {
  const GridSpec g(3.5, 24);
  CHECK(grid_from_json(grid_to_json(g)).matches(g));
  CHECK_THROWS(grid_from_json(nlohmann::json{{"L", 1.0}}));
  const nlohmann::json a = {{"b", 1}, {"a", {2, 3}}};
  const nlohmann::json b = {{"a", {2, 3}}, {"b", 1}};
  CHECK(dump_json(a) == dump_json(b));
}
