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
#include <string>
#include <vector>

#include <json.hpp>

#include "wsym/phase_space.hpp"

namespace wsym {

// <A rho + b>^p with <u> = (1 + |u|^2)^{1/2}.
struct BracketAtom {
  Mat matrix;
  Vec offset;
  double exponent = 0.0;

  bool is_constant() const { return matrix.size() == 0 || matrix.cwiseAbs().maxCoeff() == 0.0; }
};

// constant * prod_i <A_i rho + b_i>^{p_i} on R^dim. Evaluation runs over flattened row-major
// copies of the atoms so that inner quadrature loops do not allocate.
class BracketProduct {
 public:
  BracketProduct() = default;
  BracketProduct(int dim, double constant, std::vector<BracketAtom> atoms);

  int dim() const { return dim_; }
  double constant() const { return constant_; }
  const std::vector<BracketAtom>& atoms() const { return atoms_; }

  double operator()(const Vec& x) const { return eval(x.data()); }
  double eval(const double* x) const;
  double log_eval(const double* x) const;

  // y -> f(S y + t); S is dim x k.
  BracketProduct pullback(const Mat& s, const Vec& t) const;
  BracketProduct power(double p) const;
  BracketProduct operator*(const BracketProduct& other) const;

  // Power-counting degree: the maximum over subspaces K cut out by atom kernels of
  // dim K + sum of exponents of atoms not vanishing on K. Integrable over R^dim iff < 0.
  double decay_degree() const;
  bool integrable() const;

  // True when some atom reads a coordinate in [lo, hi).
  bool depends_on(int lo, int hi) const;
  // Split into the atoms reading only [lo, hi) and the rest, restricted to their coordinates.
  // Returns false when some atom reads both blocks.
  bool split(int lo, int hi, BracketProduct& inside, BracketProduct& outside) const;

 private:
  void flatten();

  int dim_ = 0;
  double constant_ = 1.0;
  std::vector<BracketAtom> atoms_;
  std::vector<double> flat_;      // per atom: rows*dim matrix then rows offsets
  std::vector<int> rows_;
};

enum class OrderDomain { E, EE };

struct OrderCertificate {
  double c0 = 1.0;
  double n0 = 1.0;
};

// An order function on E (dim 2n) or E x E* (dim 4n, coordinates (x, x*)).
class OrderFunction {
 public:
  OrderFunction(BracketProduct expr, OrderDomain domain, int n);

  static OrderFunction constant(OrderDomain domain, int n, double c);
  static OrderFunction bracket(OrderDomain domain, int n, Mat a, Vec b, double p);
  // <rho>^p on E.
  static OrderFunction point_bracket(int n, double p);
  // <x>^p and <x*>^p on E x E*.
  static OrderFunction position_bracket(int n, double p);
  static OrderFunction covector_bracket(int n, double p);

  static OrderFunction from_json(const nlohmann::json& j);
  static OrderFunction parse(const std::string& text);
  nlohmann::json to_json() const;

  OrderFunction operator*(const OrderFunction& other) const;
  OrderFunction scaled(double c) const;

  double operator()(const Vec& rho) const;
  double eval(const double* rho) const { return expr_.eval(rho); }

  int n() const { return n_; }
  int dim() const { return expr_.dim(); }
  OrderDomain domain() const { return domain_; }
  const BracketProduct& expression() const { return expr_; }
  const OrderCertificate& certificate() const { return cert_; }

  // On E x E*: whether the function reads the x block, or the x* block.
  bool depends_on_position() const;
  bool depends_on_covector() const;

 private:
  BracketProduct expr_;
  OrderDomain domain_;
  int n_;
  OrderCertificate cert_;
};

struct SweepResult {
  bool passed = true;
  double max_ratio = 0.0;  // max of m(rho) / (<rho - mu>^{N0} m(mu)), to compare with C0
  Vec worst_rho;
  Vec worst_mu;
  std::size_t samples = 0;
};

// Randomized validation of m(rho) <= C0 <rho - mu>^{N0} m(mu) on pairs in a ball.
SweepResult certify_order_axiom(const OrderFunction& m, std::size_t samples = 100000,
                                double radius = 50.0, std::uint64_t seed = 20240611);

}  // namespace wsym
