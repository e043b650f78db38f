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

#include "wsym/order_function.hpp"
#include "wsym/quadrature.hpp"

namespace wsym {

// Composition of order functions on E x E*: the integral over the affine set
// Sigma(z, z*) = {(x, x*, y, y*) : Jx*/2 - x = Jz*/2 - z, Jy*/2 + y = Jz*/2 + z, x* + y* = z*},
// parametrized by x in E through x* = z* + 2J^{-1}(x - z), y = x + Jz*/2, y* = 2J^{-1}(z - x).
struct ComposeResult {
  bool finite = true;
  double value = 0.0;
  IntegralResult integral;
};

// The integrand x -> m1(x, x*) m2(y, y*) on E.
BracketProduct compose_integrand(const OrderFunction& m1, const OrderFunction& m2, const Vec& z,
                                 const Vec& zs);
ComposeResult compose(const OrderFunction& m1, const OrderFunction& m2, const Vec& z, const Vec& zs,
                      const QuadratureSpec& spec = {});

// The kernel form: integral over E of m1(q(xt, w)) m2(q(w, yt)) dw. With (z, z*) = q(xt, yt) it
// equals 2^{2n} times compose(m1, m2, z, z*), the Jacobian of w -> x = (xt + w)/2.
ComposeResult kernel_form_compose(const OrderFunction& m1, const OrderFunction& m2, const Vec& xt,
                                  const Vec& yt, const QuadratureSpec& spec = {});

struct TranslateSample {
  Vec shift;           // (t, t*)
  double ratio = 0.0;  // m3(z + t, z* + t*) / m3(z, z*)
  double allowed = 0.0;
};

struct TranslateReport {
  bool passed = true;
  double n0 = 0.0;               // max of the two inputs' N0
  double c_tilde = 0.0;          // constant derived from the two certificates
  double measured_constant = 0.0;  // max ratio / <(t, t*)>^{2 N0}
  double measured_exponent = 0.0;  // max log(ratio) / log<(t, t*)> over translates with ratio > 1
  double base_value = 0.0;
  std::vector<TranslateSample> samples;
};

// Checks m3(z + t, z* + t*) <= C <(t, t*)>^{2 N0} m3(z, z*) on random translates of norm <= radius.
TranslateReport compose_is_order_function_check(const OrderFunction& m1, const OrderFunction& m2,
                                                const Vec& z, const Vec& zs, int translates,
                                                double radius = 5.0, std::uint64_t seed = 7,
                                                const QuadratureSpec& spec = {});

// m(x, x*) = m~(x) <x*>^{-N} where m~(x) <= C <x - y>^M m~(y).
struct SeparableSpec {
  double decay = 0.0;   // N
  double growth = 0.0;  // M
  std::optional<BracketProduct> position;  // m~ on E when known
};

// Recognizes m = m~(x) <x*>^{-N}; nullopt when m has any other shape.
std::optional<SeparableSpec> as_separable(const OrderFunction& m);

struct BoundDescriptor {
  double exponent = 0.0;     // power of <x*>
  bool log_factor = false;   // an extra ln<x*>
  bool simplified = false;   // both inner arguments negative, so the bound is max(-N2+M1, -N1+M2)
  std::optional<BracketProduct> position;  // m~1 m~2 when both are known
};

// Closed-form exponent rule for composing two separable order functions on T*R^n.
BoundDescriptor separable_compose(const SeparableSpec& s1, const SeparableSpec& s2, int n);

struct SchurResult {
  bool finite = true;
  double row_sup = 0.0;
  double col_sup = 0.0;
  Vec row_argmax;
  Vec col_argmax;
  double degree = 0.0;
};

struct SampleBox {
  double radius = 4.0;
  double step = 2.0;
};

// sup_x of the integral of m(q(x, y)) dy and sup_y of the integral over x, over a sample grid.
SchurResult schur_certificate(const OrderFunction& m, const QuadratureSpec& spec = {},
                              const SampleBox& box = {});

struct FiberResult {
  bool finite = true;
  double value = 0.0;
  IntegralResult integral;
};

// Integral of m(x*) over E* for an x-independent m.
FiberResult l1_fiber_certificate(const OrderFunction& m, const QuadratureSpec& spec = {});

struct CpCriterionResult {
  bool finite = true;
  double value = 0.0;
  double inner = 0.0;     // |m(., x*)|_{L^p(E)} / (x*-part) when the function factorizes
  bool factorized = true;
  std::string reason;
};

// Outer integral over x* of the L^p(E) norm of m(., x*).
CpCriterionResult cp_criterion_integral(const OrderFunction& m, double p,
                                        const QuadratureSpec& spec = {});

// Supremum of a bracket product over R^dim; infinite when some direction grows.
double bracket_supremum(const BracketProduct& f, bool& finite);

}  // namespace wsym
