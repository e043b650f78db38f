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

#include <functional>
#include <vector>

#include "wsym/order_function.hpp"

namespace wsym {

struct QuadratureSpec {
  int order = 8;               // Gauss-Legendre nodes per axis on the first level
  int order_step = 4;          // the second level uses order + order_step
  double cell = 0.0;           // core cell size; 0 picks it from the integrand
  double core_margin = 6.0;    // core box reaches this far beyond the atom centers
  double shell_tol = 1e-8;     // stop once a shell adds less than this, relatively
  double refine_tol = 1e-6;    // allowed relative gap between the two levels
  double max_radius = 1099511627776.0;  // 2^40
  std::size_t max_core_cells = 400000;
};

struct IntegralResult {
  bool finite = true;
  double value = 0.0;
  double degree = 0.0;        // power-counting degree of the integrand, < 0 iff integrable
  double radius = 0.0;        // outer radius reached
  double tail = 0.0;          // geometric tail estimate added beyond the radius
  double refinement_gap = 0.0;
  int shells = 0;
};

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

struct Integrand {
  std::function<double(const double*)> f;
  int dim = 0;
  Vec center;
  double core_radius = 1.0;
  double cell = 0.5;
  double degree = -1.0;  // used for the tail; must be negative
};

// Integral over R^dim: a uniform core box plus geometrically growing shells, each cell carrying a
// tensor Gauss-Legendre rule. Shell sums shrink like 2^degree, which sets the tail estimate.
IntegralResult integrate(const Integrand& g, const QuadratureSpec& spec = {});

// Integral of a bracket product; divergence is decided by power counting before any sampling.
IntegralResult integrate(const BracketProduct& f, const QuadratureSpec& spec = {});

// Core geometry (center, radius, cell) suited to a bracket product.
Integrand make_integrand(const BracketProduct& f, const QuadratureSpec& spec);

}  // namespace wsym
