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
#include <vector>

#include <json.hpp>

#include "wsym/order_function.hpp"
#include "wsym/phase_space.hpp"
#include "wsym/symbol_class.hpp"

namespace wsym {

// (sum s_k^p)^{1/p} over the singular values; the largest one for p = infinity.
double cp_norm(const CMat& m, double p);

// p-norm of a plain sequence, the sup for p = infinity.
double lp_of(const std::vector<double>& v, double p);

struct DiagonalBound {
  bool finite = true;
  double value = 0.0;          // retained sum plus the extrapolated tail
  double retained = 0.0;
  double tail = 0.0;
  double shell_ratio = 0.0;    // growth of shell sums per radius doubling
  int radius = 0;              // final lattice index radius of the retained sum
  std::vector<double> partial; // partial sums at radii r0, 2 r0, ...
  nlohmann::json to_json() const;
};

// sum over chords delta in Gamma of | alpha -> m(q(alpha, alpha + delta)) |_{l^p(Gamma)}. Partial
// sums over index boxes of radius r0 2^k give shell sums; their ratio per doubling is the tail
// exponent. A ratio of 1 or more means divergence; otherwise the geometric tail is added.
DiagonalBound diagonal_cp_bound(const OrderFunction& m, const Lattice& lat, double p, int r0 = 4,
                                int max_radius = 32);

// Matrix indexed by the lattice points of an index box, with its index lattice and majorant.
struct GaborMatrix {
  CMat entries;
  std::vector<Vec> points;
  double majorant_tol = 1e-12;

  // |entry(a, b)| <= (1 + tol) m(q(alpha, beta)) for every pair.
  bool dominated_by(const OrderFunction& m) const;
};

// Lattice points of the index box of the given radius, lexicographic.
std::vector<Vec> box_points(const Lattice& lat, int radius);
// Entries m(q(alpha, beta)), times unimodular phases and moduli in [0, 1] when rng is given.
GaborMatrix majorant_matrix(const OrderFunction& m, const Lattice& lat, int radius,
                            std::uint64_t* seed = nullptr);

struct HypothesisReport {
  double p = 1.0;
  double bound = 0.0;
  double worst_case = 0.0;   // cp norm of the matrix with moduli equal to the majorant
  double max_ratio = 0.0;    // over the random trials and the worst case
  int trials = 0;
  int box_radius = 0;
  std::uint64_t seed = 0;
  bool holds = true;
  nlohmann::json to_json() const;
};

HypothesisReport verify_matrix_hypothesis(const OrderFunction& m, const Lattice& lat, double p,
                                          int box_radius = 5, int trials = 50,
                                          std::uint64_t seed = 29);

struct CpBoundReport {
  double p = 1.0;
  double measured = 0.0;   // |a^w|_{C_p} by SVD
  double stilde = 0.0;     // |a|_{S~(m)}
  double bound = 0.0;      // diagonal C_p bound of m
  double ratio = 0.0;      // measured / (stilde * bound)
  double constant = 0.0;   // recorded constant, 0 while uncalibrated
  bool holds = true;       // measured <= constant * stilde * bound
  int truncation_radius = 0;
  std::uint64_t seed = 0;
  nlohmann::json to_json() const;
};

struct CpBoundOptions {
  double p = 1.0;
  double constant = 0.0;   // 0: report the ratio only
  StildeOptions stilde;
  int bound_radius = 4;
};

// a is a symbol on symbol_axes(xgrid, n); the S~(m) norm is taken on its coarsened E grid.
CpBoundReport cp_bound_check(const GridSymbol& a, const GridSpec& xgrid, const OrderFunction& m,
                                const WindowFamily& w, const Lattice& index_lattice,
                                const CpBoundOptions& opts = {});

struct CpBoundFamily {
  double calibration_ratio = 0.0;
  double constant = 0.0;   // calibration ratio times (1 + band)
  double band = 0.5;
  double min_relative = 0.0, max_relative = 0.0;  // ratio / calibration ratio
  bool stable = true;
  bool holds = true;
  std::vector<CpBoundReport> reports;
};

// Calibrates on the first symbol and checks the rest against the recorded constant and band.
CpBoundFamily cp_bound_family(const std::vector<GridSymbol>& family, const GridSpec& xgrid,
                                 const OrderFunction& m, const WindowFamily& w,
                                 const Lattice& index_lattice, const CpBoundOptions& opts = {},
                                 double band = 0.5);

}  // namespace wsym
