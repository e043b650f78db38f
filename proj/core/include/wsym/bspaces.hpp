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

#include "wsym/grid.hpp"
#include "wsym/phase_space.hpp"

namespace wsym {

// A finitely supported function on Z^d, stored densely on the box lo + [0, shape).
struct LatticeFunction {
  std::vector<int> lo;
  std::vector<int> shape;
  std::vector<cd> values;

  LatticeFunction() = default;
  LatticeFunction(std::vector<int> lo, std::vector<int> shape);
  static LatticeFunction delta(int dim);

  int dim() const { return static_cast<int>(shape.size()); }
  std::size_t size() const { return values.size(); }
  std::vector<int> index(std::size_t flat) const;
  // Zero outside the stored box.
  cd at(const std::vector<int>& idx) const;
  LatticeFunction translated(const std::vector<int>& shift) const;
  LatticeFunction abs() const;
};

// The built-in family of translation invariant solid sequence spaces: l^p(Gamma) and mixed
// l^{p,q}(Gamma_1 x Gamma_2). For the mixed norm the first `split` coordinates index Gamma_1; the
// inner l^p norm runs over Gamma_2 and the outer l^q norm over Gamma_1. Exponents may be infinite.
struct SeqSpaceSpec {
  enum class Kind { Lp, Mixed };
  Kind kind = Kind::Lp;
  double p = 2.0;
  double q = 2.0;
  int split = 0;

  static SeqSpaceSpec lp(double p) { return {Kind::Lp, p, p, 0}; }
  static SeqSpaceSpec mixed(double p, double q, int split) { return {Kind::Mixed, p, q, split}; }
  std::string describe() const;
  nlohmann::json to_json() const;
  static SeqSpaceSpec from_json(const nlohmann::json& j);
};

double seq_norm(const LatticeFunction& u, const SeqSpaceSpec& b);

// Full discrete convolution (f * u)(a) = sum_b f(a - b) u(b).
LatticeFunction convolve(const LatticeFunction& f, const LatticeFunction& u);

struct ConvolveReport {
  double lhs = 0.0;           // |f * u|_B
  double rhs = 0.0;           // |f|_1 |u|_B
  bool holds = true;
  double dominated_max_ratio = 0.0;  // max |v|_B / (|f|_1 |u|_B) over kernels |k(a,b)| <= f(a-b)
  int trials = 0;
};

ConvolveReport convolve_bound_check(const LatticeFunction& f, const LatticeFunction& u,
                                    const SeqSpaceSpec& b, int trials = 20,
                                    std::uint64_t seed = 11);

struct PrecedesReport {
  bool rule = false;          // verdict of the rule table
  bool falsified = false;     // a sample contradicted "B precedes B~"
  double constant = 0.0;      // calibrated C used for the falsification test
  double max_ratio = 0.0;     // max |u~|_{B~} / |u|_B over the samples
  std::vector<double> witness_ratios;  // growing-support witness, one entry per support size
  bool witness_grows = false;
  int trials = 0;
  bool consistent = true;     // rule and sampling agree
};

// Rule table plus randomized falsification of B < B~ on Z^dim against the maximal dominated
// function u~(g~) = sum_g <g~ - g>^{-N} |u(g)| on the lattice scale * Z^dim.
PrecedesReport precedes_check(const SeqSpaceSpec& b, const SeqSpaceSpec& bt, double n_decay,
                              int dim = 2, int trials = 50, std::uint64_t seed = 13,
                              double second_scale = 1.5, int radius = 6);

bool precedes_rule(const SeqSpaceSpec& b, const SeqSpaceSpec& bt);

// Amalgam space [B] over a diagonal lattice on the axes of a grid function.
struct AmalgamSpec {
  enum class Window {
    Cell,     // sup over the fundamental cell around each lattice point, the cell-supremum surrogate
    Support,  // sup over the support of a bump of radius one lattice spacing, a feasible majorant
  };
  SeqSpaceSpec b;
  Vec spacing;          // lattice spacings per axis (origin at 0)
  double decay = 3.0;   // N > d
  Window window = Window::Cell;

  nlohmann::json to_json() const;
};

// Lattice function gamma -> sup |u| over the window around gamma, restricted to the grid box.
LatticeFunction amalgam_sequence(const GridSymbol& u, const AmalgamSpec& spec);
double amalgam_norm(const GridSymbol& u, const AmalgamSpec& spec);

using Weight = std::function<double(const Vec&)>;

struct ComposeConstantResult {
  bool diverges = false;
  double constant = 0.0;        // estimate at the larger radius
  double constant_small = 0.0;  // estimate at the base radius
  double growth = 0.0;          // constant / constant_small - 1
  int radius = 0;
  int trials = 0;
};

// Estimates C in |k3/m3|_{B3} <= C |k1/m1|_{B1} |k2/m2|_{B2} with k3(a) = sum_b k1(a,b) k2(b) on
// Z^d, from random and extremal unit-norm samples, at the base radius and at twice that radius.
// Growth of more than 10% under the doubling flags divergence.
ComposeConstantResult compose_constant_estimate(const Weight& m1, const SeqSpaceSpec& b1, const Weight& m2,
                                         const SeqSpaceSpec& b2, const Weight& m3,
                                         const SeqSpaceSpec& b3, int dim, int radius = 6,
                                         int trials = 20, std::uint64_t seed = 17);

// The pullback m o q of a weight on E x E*, with q(x, y) = ((x + y)/2, J^{-1}(y - x)).
Weight pullback_by_q(const Weight& m, int n);

struct KernelActionReport {
  std::vector<cd> k3;        // K3 on the x grid
  double lhs = 0.0;          // |K3/m3|_[B3]
  double rhs = 0.0;          // F vol C |K/m1|_[B1] |u/m2|_[B2]
  double k_norm = 0.0;
  double u_norm = 0.0;
  double constant = 0.0;     // composition constant that was used
  double fluctuation = 0.0;  // F, in-cell variation of m1 m2 / m3
  bool holds = true;
};

// K3(x) = sum_z K(x, z) u(z) dz on a one-axis-per-dimension position grid of rank d shared by
// x and z. K is |x grid| by |z grid|, row-major over the axes. Norms use cell sups over the
// lattice with the given spacing.
KernelActionReport kernel_action(const CMat& k, const std::vector<cd>& u,
                                 const std::vector<GridSpec>& axes, const Weight& m1,
                                 const Weight& m2, const Weight& m3, const SeqSpaceSpec& b1,
                                 const SeqSpaceSpec& b2, const SeqSpaceSpec& b3, double spacing,
                                 double constant);

}  // namespace wsym
