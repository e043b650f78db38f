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

#include <map>
#include <vector>

#include "wsym/grid.hpp"

namespace wsym {

// A polynomial symbol on E = R^{2n}, coordinates (x_1..x_n, xi_1..xi_n).
class PolynomialSymbol {
 public:
  using Monomial = std::vector<int>;

  explicit PolynomialSymbol(int n);
  static PolynomialSymbol constant(int n, cd c);
  // The coordinate function X_k, k in [0, 2n).
  static PolynomialSymbol coordinate(int n, int k);

  int n() const { return n_; }
  const std::map<Monomial, cd>& terms() const { return terms_; }
  bool is_zero(double tol = 0.0) const;

  PolynomialSymbol derivative(int k) const;
  PolynomialSymbol operator+(const PolynomialSymbol& o) const;
  PolynomialSymbol operator-(const PolynomialSymbol& o) const;
  PolynomialSymbol operator*(const PolynomialSymbol& o) const;
  PolynomialSymbol operator*(cd c) const;

  cd operator()(const Vec& x) const;
  GridSymbol sample(const std::vector<GridSpec>& axes) const;
  // Largest coefficient modulus of this - o.
  double distance(const PolynomialSymbol& o) const;

 private:
  void add(const Monomial& m, cd c);
  int n_;
  std::map<Monomial, cd> terms_;
};

// Weyl product through the multiplier series sum_k ((i/2) sigma(D_X, D_Y))^k / k!, which
// terminates on polynomials, so the result is exact.
PolynomialSymbol moyal_product(const PolynomialSymbol& a, const PolynomialSymbol& b);

}  // namespace wsym
