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

#include "job_config.hpp"

#include <openssl/sha.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>

#include "wsym/error.hpp"
#include "wsym/report.hpp"

namespace wsym::cli {

using nlohmann::json;
namespace fs = std::filesystem;

JobConfig JobConfig::load(const std::string& command, const std::string& config_path) {
  JobConfig c;
  c.command = command;
  if (config_path.empty()) return c;
  std::ifstream in(config_path);
  if (!in) throw InputError("cannot open config " + config_path);
  try {
    c.body = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("malformed config " + config_path + ": " + e.what());
  }
  if (!c.body.is_object()) throw InputError("config must be a JSON object");
  c.base_dir = fs::path(config_path).parent_path().string();
  if (c.base_dir.empty()) c.base_dir = ".";
  if (c.body.contains("seed")) c.seed = c.body["seed"].get<std::uint64_t>();
  if (c.body.contains("grid")) c.grid = grid_from_json(c.body["grid"]);
  if (c.body.contains("tol")) c.tol = c.body["tol"].get<double>();
  return c;
}

json JobConfig::canonical() const {
  json j;
  j["command"] = command;
  j["body"] = body;
  j["seed"] = seed;
  j["grid"] = grid ? grid_to_json(*grid) : json(nullptr);
  j["tol"] = tol ? json(*tol) : json(nullptr);
  return j;
}

std::string JobConfig::hash() const { return sha256_hex(canonical().dump()); }

std::string JobConfig::resolve(const std::string& path) const {
  const fs::path p(path);
  return p.is_absolute() ? path : (fs::path(base_dir) / p).string();
}

const json& JobConfig::require(const char* key) const {
  if (!body.contains(key)) throw InputError(command + ": config lacks '" + key + "'");
  return body[key];
}

GridSpec parse_grid(const std::string& text) {
  const auto comma = text.find(',');
  try {
    const int n = std::stoi(text.substr(0, comma));
    if (comma == std::string::npos) return GridSpec::balanced(n);
    return GridSpec(std::stod(text.substr(comma + 1)), n);
  } catch (const std::logic_error&) {
    throw InputError("--grid expects N or N,L, got '" + text + "'");
  }
}

OrderFunction order_function_from(const json& j, int n) {
  if (!j.is_string()) return OrderFunction::from_json(j);
  const std::string s = j.get<std::string>();
  static const std::regex token(R"(\s*(?:<(x\*|x|rho)>\^(-?[0-9.]+(?:e-?[0-9]+)?)|([0-9.]+(?:e-?[0-9]+)?))\s*)");
  std::optional<OrderFunction> m;
  double constant = 1.0;
  auto pos = s.cbegin();
  std::smatch t;
  while (pos != s.cend()) {
    if (!std::regex_search(pos, s.cend(), t, token, std::regex_constants::match_continuous) || t.length(0) == 0)
      throw InputError("cannot parse order function '" + s + "'");
    if (t[3].matched) {
      constant *= std::stod(t[3].str());
    } else {
      const double p = std::stod(t[2].str());
      const std::string kind = t[1].str();
      const OrderFunction f = kind == "x"     ? OrderFunction::position_bracket(n, p)
                              : kind == "x*" ? OrderFunction::covector_bracket(n, p)
                                             : OrderFunction::point_bracket(n, p);
      m = m ? *m * f : f;
    }
    pos = t[0].second;
  }
  if (!(constant > 0.0) || !std::isfinite(constant))
    throw InputError("illegal constant in '" + s + "': order functions are strictly positive");
  if (!m) return OrderFunction::constant(OrderDomain::EE, n, constant);
  return constant == 1.0 ? *m : m->scaled(constant);
}

namespace {

cd gaussian_at(const json& g, const Vec& x) {
  const double alpha = g.value("alpha", 1.0);
  std::vector<double> c = g.value("center", std::vector<double>(x.size(), 0.0));
  std::vector<double> k = g.value("modulation", std::vector<double>(x.size(), 0.0));
  if (c.size() != static_cast<std::size_t>(x.size()) || k.size() != c.size())
    throw DimensionError("gaussian center and modulation must have one entry per symbol axis");
  double r2 = 0.0, phase = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    r2 += (x[i] - c[i]) * (x[i] - c[i]);
    phase += k[i] * x[i];
  }
  const double w = g.value("weight", 1.0);
  return w * std::exp(-alpha * r2) * std::polar(1.0, phase);
}

}  // namespace

GridSymbol symbol_from(const json& j, const JobConfig& cfg, const std::vector<GridSpec>& axes) {
  const int n = cfg.n();
  if (j.is_string()) {
    GridSymbol g = read_grid_symbol(cfg.resolve(j.get<std::string>()));
    if (g.axes.size() != axes.size()) throw DimensionError("symbol file has the wrong number of axes");
    for (std::size_t i = 0; i < axes.size(); ++i)
      if (!g.axes[i].matches(axes[i])) throw DimensionError("symbol file grid does not match the job grid");
    return g;
  }
  if (!j.is_object()) throw InputError("symbol entry must be a path or a generator object");
  if (j.contains("zero")) return GridSymbol(n, axes, Domain::PhaseSpace);
  if (j.contains("checkerboard")) {
    const double amp = j["checkerboard"].get<double>();
    GridSymbol g(n, axes, Domain::PhaseSpace);
    for (std::size_t f = 0; f < g.size(); ++f) {
      int parity = 0;
      for (int i : g.unflatten(f)) parity += i;
      g.values[f] = parity % 2 ? -amp : amp;
    }
    return g;
  }
  std::vector<json> parts;
  if (j.contains("gaussian")) parts.push_back(j["gaussian"]);
  if (j.contains("sum"))
    for (const auto& p : j["sum"]) parts.push_back(p.contains("gaussian") ? p["gaussian"] : p);
  if (parts.empty()) throw InputError("unknown symbol generator " + j.dump());
  try {
    return GridSymbol::sample(n, axes, Domain::PhaseSpace, [&](const Vec& x) {
      cd v = 0.0;
      for (const auto& p : parts) v += gaussian_at(p, x);
      return v;
    });
  } catch (const json::exception& e) {
    throw InputError(std::string("bad gaussian entry: ") + e.what());
  }
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), digest);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned char b : digest) {
    out += hex[b >> 4];
    out += hex[b & 15];
  }
  return out;
}

}  // namespace wsym::cli
