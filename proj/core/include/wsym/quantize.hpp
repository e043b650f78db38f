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

#include "wsym/grid.hpp"

namespace wsym {

// Dense matrix of a^w on a position grid; entries K(x_i, y_j) h^n so that the matrix acts as the
// discretized integral operator. Rows and columns are row-major over the n position axes.
struct WeylOperator {
  CMat matrix;
  GridSpec grid;
  int n = 1;
  std::string provenance;
};

// Discrete Weyl quantization. The symbol must live on symbol_axes(xgrid, n): its refined x-axes
// contain every midpoint (x_i + x_j)/2, its dual axes every frequency the grid resolves.
WeylOperator weyl_quantize(const GridSymbol& a, const GridSpec& xgrid);

struct MoyalOptions {
  // Guard on the size of the E x E tensor the product is defined through (16 bytes per entry).
  double memory_budget_bytes = 2147483648.0;
  // Allowed fraction of spectral energy within two bins of the Nyquist edge.
  double alias_tol = 1e-10;
  bool check_aliasing = true;
};

// Weyl product a#b through the exact Fourier multiplier exp((i/2) sigma(Xi, H)) on the dual grid.
// The inverse transform of the E x E tensor is only needed on the diagonal, so the multiplied
// tensor is folded along k + l before a single inverse transform on E.
GridSymbol moyal_product(const GridSymbol& a, const GridSymbol& b, const MoyalOptions& opts = {});

// l(X) = X . X*.
struct LinearForm {
  Vec covector;

  double operator()(const Vec& x) const { return x.dot(covector); }
  // H_l = J grad l = J X*.
  Vec hamilton_vector() const;
  LinearForm scaled(double c) const { return {c * covector}; }
};

// Samples of exp(i l) on the grid of `like`; X* must be a frequency of that grid.
GridSymbol exp_linear(const LinearForm& l, const GridSymbol& like);

// exp(il) # a = exp(il) a(X + H_l/2),  a # exp(il) = exp(il) a(X - H_l/2).
GridSymbol exp_symbol_left(const LinearForm& l, const GridSymbol& a);
GridSymbol exp_symbol_right(const GridSymbol& a, const LinearForm& l);
// exp(il/2) # a # exp(il/2) = exp(il) a.
GridSymbol exp_symbol_sandwich(const LinearForm& l, const GridSymbol& a);
// exp(il) # a # exp(-il) = a(X + H_l).
GridSymbol exp_symbol_conjugate(const LinearForm& l, const GridSymbol& a);

}  // namespace wsym
