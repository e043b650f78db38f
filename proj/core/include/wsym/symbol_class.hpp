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
#include <vector>

#include <json.hpp>

#include "wsym/bspaces.hpp"
#include "wsym/grid.hpp"
#include "wsym/order_function.hpp"
#include "wsym/phase_space.hpp"

namespace wsym {

// Partition of unity chi_0 = g / sum_gamma tau_gamma g over a diagonal lattice, with g a centred
// Gaussian exp(-|rho|^2 / (2 width^2)). Both g and the lattice factor over the coordinate axes, so
// chi_0 is a product of one-dimensional profiles.
struct WindowFamily {
  Lattice lattice = Lattice::integer(1);
  double width = 1.0;
  bool partition = true;
  double truncation = 0.0;  // radius of the periodization sum along each axis

  int dim() const { return lattice.dim(); }
  double spacing(int axis) const { return lattice.basis()(axis, axis); }
  // One-dimensional profile along `axis`, evaluated at offset t from a lattice point.
  double factor(int axis, double t) const;
  double operator()(const Vec& rho) const;
  // max |sum_gamma chi(rho - gamma) - 1| over `samples` random points of the box.
  double partition_error(const Box& box, int samples = 200, unsigned seed = 3) const;
};

WindowFamily build_partition(const Lattice& lat, double width);

// Desk-scale membership verdict. Membership asks for a uniform bound over the whole lattice;
// on a finite grid the proxy compares the ratio profile far out in frequency with the profile
// near the origin. With F = (frequency limit) - margin, the inner band is |gamma*|_inf <= F/2 and
// the outer band 0.65 F <= |gamma*|_inf <= F; the symbol is a member when the outer supremum does
// not exceed the inner one.
struct VerdictBands {
  double limit = 0.0;
  double inner = 0.0;
  double outer_lo = 0.0;
  double outer_hi = 0.0;

  static VerdictBands from_limit(double frequency_limit, double margin = 2.5);
  bool in_inner(double f) const { return f <= inner; }
  bool in_outer(double f) const { return f >= outer_lo && f <= outer_hi; }
};

struct MembershipReport {
  std::string mode;
  std::vector<Vec> points;                // lattice point or (j, x*) per ratio
  std::vector<std::vector<int>> indices;  // lattice indices, when the mode has them
  std::vector<double> ratios;
  std::string aggregation = "sup";
  double norm = 0.0;
  double inner_sup = 0.0;
  double outer_sup = 0.0;
  bool member = true;
  VerdictBands bands;
  double truncation_bound = 0.0;  // bound on every ratio that was not evaluated
  std::size_t evaluated = 0;
  std::size_t skipped = 0;

  // Band suprema and the verdict from the stored ratios; `freq` returns |gamma*|_inf.
  void classify(const std::vector<double>& freq);
  nlohmann::json to_json(bool with_ratios = false) const;
};

struct StildeOptions {
  double p = 2.0;               // L^p norm of chi_gamma^w a
  double prune_relative = 1e-12;
  double boundary_tol = 1e-8;
};

// |a|_{S~(m)} with the lattice windows: sup over gamma of |chi_gamma^w a|_{L^p(E)} / m(gamma).
// The lattice lives in E x E* (dimension 4n) and must be diagonal; a is sampled on E.
MembershipReport stilde_norm(const GridSymbol& a, const OrderFunction& m, const WindowFamily& w,
                             const StildeOptions& opts = {});

// The same ratio sequence aggregated with a sequence space B over the lattice indices.
MembershipReport bspace_stilde_norm(const GridSymbol& a, const OrderFunction& m,
                                    const WindowFamily& w, const SeqSpaceSpec& b,
                                    const StildeOptions& opts = {});

struct StftOptions {
  double alias_tol = 1e-6;
  double prune_relative = 1e-12;
};

// sup over (j, x*) of |FT(chi_j a)(x*)| / m(j, x*) with a partition over a lattice J in E.
MembershipReport stft_membership(const GridSymbol& a, const OrderFunction& m,
                                 const WindowFamily& spatial, const StftOptions& opts = {});

// Weyl operator of the one-dimensional phase-space symbol f(t) g(tau) on a position axis.
CMat axis_window_operator(const GridSpec& axis, const std::function<double(double)>& f,
                          const std::function<double(double)>& g);

// Dual window family by direct inversion on the grid: S = sum_gamma
// (chi~^eps_gamma)^w chi_gamma^w is inverted directly and psi_gamma^w = S^{-1} (chi~^eps_gamma)^w.
// Everything factors over the axes of E, so the operators are stored per axis and per lattice
// coordinate pair along that axis.
struct DualWindow {
  struct Axis {
    GridSpec grid;
    std::vector<std::pair<double, double>> points;  // (gamma, gamma*) along this axis
    std::vector<CMat> chi;
    std::vector<CMat> psi;
    CMat sum;  // sum_g psi_g chi_g
    double condition = 0.0;
  };
  std::vector<Axis> axes;
  double epsilon = 0.0;
  double condition = 0.0;  // product of the per-axis condition numbers
  double residual = 0.0;   // relative residual of sum psi chi - I on interior test vectors

  // sum_gamma psi_gamma^w chi_gamma^w applied to a function sampled on E.
  GridSymbol reconstruct(const GridSymbol& a) const;
};

DualWindow dual_window(const WindowFamily& w, double epsilon, const std::vector<GridSpec>& working,
                       double max_condition = 1e8);

// Applies a matrix along one axis of a row-major tensor.
void apply_along_axis(std::vector<cd>& data, const std::vector<int>& shape, int axis, const CMat& op);

}  // namespace wsym
