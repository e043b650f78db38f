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

#include "wsym/schatten.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "wsym/error.hpp"
#include "wsym/grid.hpp"
#include "wsym/quantize.hpp"

namespace wsym {

using nlohmann::json;

namespace {

bool is_inf(double p) { return std::isinf(p); }

void check_p(double p) {
  if (!(p >= 1.0)) throw InputError("Schatten exponent must satisfy p >= 1");
}

json number_or_inf(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

// Iterates over the integer box [-r, r]^d.
template <class F>
void for_each_index(int d, int r, F&& f) {
  IVec idx = IVec::Constant(d, -r);
  while (true) {
    f(idx);
    int k = d - 1;
    while (k >= 0 && idx[k] == r) idx[k--] = -r;
    if (k < 0) break;
    ++idx[k];
  }
}

double diagonal_sum(const OrderFunction& m, const Lattice& lat, double p, int r) {
  const SymplecticSpace e(m.n());
  const int d = lat.dim();
  double total = 0.0;
  Vec rho(2 * d);
  for_each_index(d, r, [&](const IVec& delta) {
    const Vec shift = lat.basis() * delta.cast<double>();
    double acc = 0.0;
    for_each_index(d, r, [&](const IVec& alpha) {
      const Vec a = lat.point(alpha);
      const Chord c = e.chord(a, a + shift);
      rho << c.midpoint, c.covector;
      const double v = m(rho);
      acc = is_inf(p) ? std::max(acc, v) : acc + std::pow(v, p);
    });
    total += is_inf(p) ? acc : std::pow(acc, 1.0 / p);
  });
  return total;
}

}  // namespace

double cp_norm(const CMat& m, double p) {
  check_p(p);
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<CMat> svd(m);
  const Vec s = svd.singularValues();
  if (is_inf(p)) return s.size() ? s.maxCoeff() : 0.0;
  double acc = 0.0;
  for (int i = 0; i < s.size(); ++i) acc += std::pow(s[i], p);
  return std::pow(acc, 1.0 / p);
}

double lp_of(const std::vector<double>& v, double p) {
  check_p(p);
  double acc = 0.0;
  for (double x : v) acc = is_inf(p) ? std::max(acc, std::abs(x)) : acc + std::pow(std::abs(x), p);
  return is_inf(p) ? acc : std::pow(acc, 1.0 / p);
}

json DiagonalBound::to_json() const {
  return {{"finite", finite},
          {"value", number_or_inf(value)},
          {"retained", retained},
          {"tail", number_or_inf(tail)},
          {"shell_ratio", shell_ratio},
          {"truncation_radius", radius},
          {"partial_sums", partial}};
}

DiagonalBound diagonal_cp_bound(const OrderFunction& m, const Lattice& lat, double p, int r0,
                                int max_radius) {
  check_p(p);
  if (m.domain() != OrderDomain::EE) throw DimensionError("the majorant must live on E x E*");
  if (lat.dim() != 2 * m.n()) throw DimensionError("the index lattice must live in E");
  if (r0 < 1 || max_radius < 4 * r0) throw InputError("radius schedule needs at least three levels");
  DiagonalBound b;
  for (int r = r0; r <= max_radius; r *= 2) {
    b.partial.push_back(diagonal_sum(m, lat, p, r));
    b.radius = r;
  }
  b.retained = b.partial.back();
  const std::size_t k = b.partial.size();
  const double s_prev = b.partial[k - 2] - b.partial[k - 3];
  const double s_last = b.partial[k - 1] - b.partial[k - 2];
  if (s_last <= 1e-15 * b.retained) {
    b.shell_ratio = 0.0;
    b.tail = 0.0;
  } else {
    b.shell_ratio = s_prev > 0.0 ? s_last / s_prev : std::numeric_limits<double>::infinity();
    // Shell sums of a convergent power-law tail shrink geometrically under radius doubling; a
    // ratio this close to one is a logarithmic or worse divergence.
    if (b.shell_ratio >= 0.9) {
      b.finite = false;
      b.tail = std::numeric_limits<double>::infinity();
      b.value = std::numeric_limits<double>::infinity();
      return b;
    }
    b.tail = s_last * b.shell_ratio / (1.0 - b.shell_ratio);
  }
  b.value = b.retained + b.tail;
  return b;
}

bool GaborMatrix::dominated_by(const OrderFunction& m) const {
  const SymplecticSpace e(m.n());
  Vec rho(2 * e.dim());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) {
      const Chord c = e.chord(points[i], points[j]);
      rho << c.midpoint, c.covector;
      if (std::abs(entries(i, j)) > (1.0 + majorant_tol) * m(rho)) return false;
    }
  return true;
}

std::vector<Vec> box_points(const Lattice& lat, int radius) {
  std::vector<Vec> pts;
  for_each_index(lat.dim(), radius, [&](const IVec& idx) { pts.push_back(lat.point(idx)); });
  return pts;
}

GaborMatrix majorant_matrix(const OrderFunction& m, const Lattice& lat, int radius,
                            std::uint64_t* seed) {
  GaborMatrix g;
  g.points = box_points(lat, radius);
  const int k = static_cast<int>(g.points.size());
  const SymplecticSpace e(m.n());
  g.entries.resize(k, k);
  std::mt19937_64 rng(seed ? *seed : 0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Vec rho(2 * e.dim());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Chord c = e.chord(g.points[i], g.points[j]);
      rho << c.midpoint, c.covector;
      double v = m(rho);
      cd phase = 1.0;
      if (seed) {
        v *= unit(rng);
        phase = std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
      }
      g.entries(i, j) = v * phase;
    }
  return g;
}

json HypothesisReport::to_json() const {
  return {{"p", number_or_inf(p)},       {"bound", bound},
          {"measured", worst_case},      {"ratio", max_ratio},
          {"trials", trials},            {"truncation_radius", box_radius},
          {"seed", seed},                {"holds", holds}};
}

HypothesisReport verify_matrix_hypothesis(const OrderFunction& m, const Lattice& lat, double p,
                                          int box_radius, int trials, std::uint64_t seed) {
  const DiagonalBound db = diagonal_cp_bound(m, lat, p);
  if (!db.finite) throw DivergenceError("diagonal C_p bound diverges for this majorant");
  HypothesisReport r;
  r.p = p;
  r.bound = db.value;
  r.trials = trials;
  r.box_radius = box_radius;
  r.seed = seed;
  r.worst_case = cp_norm(majorant_matrix(m, lat, box_radius).entries, p);
  r.max_ratio = r.worst_case / r.bound;
  for (int t = 0; t < trials; ++t) {
    // One independent stream per trial index.
    std::uint64_t s = seed * 1000003ULL + static_cast<std::uint64_t>(t);
    const double c = cp_norm(majorant_matrix(m, lat, box_radius, &s).entries, p);
    r.max_ratio = std::max(r.max_ratio, c / r.bound);
  }
  r.holds = r.max_ratio <= 1.0 + 1e-8;
  if (!r.holds) throw ViolationError("C_p norm of a dominated matrix exceeds the summed-diagonal bound");
  return r;
}

json CpBoundReport::to_json() const {
  return {{"p", number_or_inf(p)},
          {"bound", bound},
          {"stilde_norm", stilde},
          {"measured", measured},
          {"ratio", ratio},
          {"constant", constant},
          {"holds", holds},
          {"truncation_radius", truncation_radius},
          {"seed", seed}};
}

CpBoundReport cp_bound_check(const GridSymbol& a, const GridSpec& xgrid, const OrderFunction& m,
                                const WindowFamily& w, const Lattice& index_lattice,
                                const CpBoundOptions& opts) {
  CpBoundReport r;
  r.p = opts.p;
  const DiagonalBound db = diagonal_cp_bound(m, index_lattice, opts.p, opts.bound_radius,
                                             8 * opts.bound_radius);
  if (!db.finite) throw DivergenceError("diagonal C_p bound diverges for this majorant");
  r.bound = db.value;
  r.truncation_radius = db.radius;
  r.measured = cp_norm(weyl_quantize(a, xgrid).matrix, opts.p);
  r.stilde = stilde_norm(coarsen_symbol(a), m, w, opts.stilde).norm;
  const double product = r.stilde * r.bound;
  r.ratio = product > 0.0 ? r.measured / product : 0.0;
  r.constant = opts.constant;
  r.holds = opts.constant <= 0.0 || r.measured <= opts.constant * product;
  return r;
}

CpBoundFamily cp_bound_family(const std::vector<GridSymbol>& family, const GridSpec& xgrid,
                                 const OrderFunction& m, const WindowFamily& w,
                                 const Lattice& index_lattice, const CpBoundOptions& opts,
                                 double band) {
  if (family.empty()) throw InputError("empty calibration family");
  CpBoundFamily f;
  f.band = band;
  CpBoundOptions o = opts;
  o.constant = 0.0;
  for (const auto& a : family) f.reports.push_back(cp_bound_check(a, xgrid, m, w, index_lattice, o));
  f.calibration_ratio = f.reports.front().ratio;
  f.constant = f.calibration_ratio * (1.0 + band);
  f.min_relative = std::numeric_limits<double>::infinity();
  for (auto& r : f.reports) {
    const double rel = r.ratio / f.calibration_ratio;
    f.min_relative = std::min(f.min_relative, rel);
    f.max_relative = std::max(f.max_relative, rel);
    r.constant = f.constant;
    r.holds = r.measured <= f.constant * r.stilde * r.bound;
    f.holds = f.holds && r.holds;
  }
  f.stable = f.min_relative >= 1.0 - band && f.max_relative <= 1.0 + band;
  return f;
}

}  // namespace wsym
