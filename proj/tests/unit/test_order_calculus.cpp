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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wsym/error.hpp"
#include "wsym/order_calculus.hpp"

using namespace wsym;

namespace {

constexpr double kPi = std::numbers::pi;

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

double bracket(double a, double b) { return std::sqrt(1.0 + a * a + b * b); }

// (1/4) int_{R^2} <zs - w>^{-3} <w>^{-3} dw by the trapezoid rule, which converges spectrally for
// integrands analytic in a strip. The factor 1/4 is the Jacobian of w = 2 J^{-1}(z - x).
double convolution_oracle(const Vec& zs) {
  const double h = 0.2, r = 120.0;
  const int k = static_cast<int>(r / h);
  double acc = 0.0;
  for (int i = -k; i <= k; ++i)
    for (int j = -k; j <= k; ++j) {
      const double a = i * h, b = j * h;
      acc += std::pow(bracket(zs[0] - a, zs[1] - b), -3) * std::pow(bracket(a, b), -3);
    }
  return 0.25 * acc * h * h;
}

}  // namespace

TEST_CASE("composition of <x*>^-3 with itself is a convolution in z*") {
  const OrderFunction m = OrderFunction::covector_bracket(1, -3);
  for (const Vec& zs : {v2(0, 0), v2(3, -1), v2(10, 4)}) {
    const ComposeResult a = compose(m, m, v2(0, 0), zs);
    const ComposeResult b = compose(m, m, v2(5, -7), zs);
    REQUIRE(a.finite);
    const double oracle = convolution_oracle(zs);
    CHECK(a.value == doctest::Approx(oracle).epsilon(1e-5));
    CHECK(b.value == doctest::Approx(a.value).epsilon(1e-9));
  }
}

TEST_CASE("kernel form carries the Jacobian 2^{2n}") {
  const OrderFunction m1 = OrderFunction::position_bracket(1, -3) * OrderFunction::covector_bracket(1, -3);
  const OrderFunction m2 = OrderFunction::covector_bracket(1, -4);
  const Vec xt = v2(0.5, -1.0), yt = v2(2.0, 1.0);
  const SymplecticSpace e(1);
  const Chord c = e.chord(xt, yt);
  const double k = kernel_form_compose(m1, m2, xt, yt).value;
  CHECK(k == doctest::Approx(4.0 * compose(m1, m2, c.midpoint, c.covector).value).epsilon(1e-6));
}

TEST_CASE("divergent compositions are flagged") {
  const OrderFunction m = OrderFunction::covector_bracket(1, -1);
  CHECK_FALSE(compose(m, m, v2(0, 0), v2(1, 1)).finite);
  const OrderFunction one = OrderFunction::constant(OrderDomain::EE, 1, 1.0);
  CHECK_FALSE(compose(one, one, v2(0, 0), v2(0, 0)).finite);
}

TEST_CASE("composed order functions satisfy the translate test") {
  const OrderFunction m = OrderFunction::covector_bracket(1, -3);
  const TranslateReport r = compose_is_order_function_check(m, m, v2(0.2, 0.1), v2(1.0, -0.5), 12);
  CHECK(r.passed);
  CHECK(r.samples.size() == 12);
  CHECK(r.measured_exponent <= 6.0);
  for (const auto& s : r.samples) CHECK(s.ratio <= s.allowed);

  const OrderFunction m1 = OrderFunction::position_bracket(1, -3) * OrderFunction::covector_bracket(1, -3);
  CHECK(compose_is_order_function_check(m1, m, v2(0, 0), v2(0.5, 0.5), 8).passed);
}

TEST_CASE("separable recognition and the closed-form exponent") {
  const auto mk = [](double n, double mm) {
    return OrderFunction::position_bracket(1, mm) * OrderFunction::covector_bracket(1, -n);
  };
  const auto s = as_separable(mk(4, 1));
  REQUIRE(s);
  CHECK(s->decay == doctest::Approx(4));
  CHECK(s->growth == doctest::Approx(1));
  CHECK_FALSE(as_separable(OrderFunction::point_bracket(2, -3).scaled(1.0)));

  auto spec = [](double n, double m) { return SeparableSpec{n, m, std::nullopt}; };
  const BoundDescriptor b44 = separable_compose(spec(4, 0), spec(4, 0), 1);
  CHECK(b44.exponent == doctest::Approx(-4));
  CHECK_FALSE(b44.log_factor);
  const BoundDescriptor b22 = separable_compose(spec(2, 0), spec(2, 0), 1);
  CHECK(b22.exponent == doctest::Approx(-2));
  CHECK(b22.log_factor);
  const BoundDescriptor b53 = separable_compose(spec(5, 1), spec(3, 0), 1);
  CHECK(b53.exponent == doctest::Approx(-2));
  CHECK_THROWS_AS(separable_compose(spec(1, 0), spec(1, 0), 1), DivergenceError);
}

TEST_CASE("Schur and fibre certificates") {
  const OrderFunction m = OrderFunction::covector_bracket(1, -3);
  const SchurResult s = schur_certificate(m);
  REQUIRE(s.finite);
  // 2 pi int_0^inf r (1 + r^2)^{-3/2} dr = 2 pi
  CHECK(s.row_sup == doctest::Approx(2 * kPi).epsilon(1e-6));
  CHECK(s.col_sup == doctest::Approx(2 * kPi).epsilon(1e-6));
  CHECK_FALSE(schur_certificate(OrderFunction::constant(OrderDomain::EE, 1, 1.0)).finite);

  const SchurResult mixed =
      schur_certificate(OrderFunction::position_bracket(1, -3) * OrderFunction::covector_bracket(1, -3));
  REQUIRE(mixed.finite);
  CHECK(mixed.row_argmax.norm() <= 2.0 + 1e-12);
  CHECK(mixed.col_argmax.norm() <= 2.0 + 1e-12);

  const FiberResult f = l1_fiber_certificate(m);
  CHECK(f.value == doctest::Approx(2 * kPi).epsilon(1e-6));
  CHECK(l1_fiber_certificate(m.scaled(3.0)).value == doctest::Approx(6 * kPi).epsilon(1e-6));
  CHECK_FALSE(l1_fiber_certificate(OrderFunction::covector_bracket(1, -2)).finite);
}

TEST_CASE("C_p criterion integral") {
  const OrderFunction m33 = OrderFunction::position_bracket(1, -3) * OrderFunction::covector_bracket(1, -3);
  const CpCriterionResult r = cp_criterion_integral(m33, 2.0);
  REQUIRE(r.finite);
  // |<x>^{-3}|_{L^2(R^2)} = sqrt(pi / 2), times the fibre integral 2 pi.
  CHECK(r.value == doctest::Approx(std::sqrt(kPi / 2) * 2 * kPi).epsilon(1e-5));
  CHECK_FALSE(cp_criterion_integral(OrderFunction::covector_bracket(1, -3), 1.0).finite);
  const OrderFunction m13 = OrderFunction::position_bracket(1, -1) * OrderFunction::covector_bracket(1, -3);
  const CpCriterionResult inf = cp_criterion_integral(m13, std::numeric_limits<double>::infinity());
  REQUIRE(inf.finite);
  CHECK(inf.value == doctest::Approx(2 * kPi).epsilon(1e-6));
}
