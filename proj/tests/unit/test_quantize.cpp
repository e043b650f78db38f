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
#include <random>

#include "wsym/error.hpp"
#include "wsym/polynomial.hpp"
#include "wsym/quantize.hpp"

using namespace wsym;

namespace {

constexpr double kPi = std::numbers::pi;

GridSymbol gaussian(const std::vector<GridSpec>& axes, double alpha, double cx, double cxi, double kx = 0,
                    double kxi = 0) {
  return GridSymbol::sample(1, axes, Domain::PhaseSpace, [=](const Vec& X) {
    const double r2 = (X[0] - cx) * (X[0] - cx) + (X[1] - cxi) * (X[1] - cxi);
    return std::exp(-alpha * r2) * std::polar(1.0, kx * X[0] + kxi * X[1]);
  });
}

double sup_diff(const GridSymbol& a, const GridSymbol& b) {
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a.values[i] - b.values[i]));
  return e;
}

// A grid whose extent is a multiple of pi, so that the covector (1, 0) is a grid frequency.
const GridSpec kPiGrid(3 * kPi, 48);

}  // namespace

TEST_CASE("quantization of 1, x and xi") {
  const GridSpec g = GridSpec::balanced(32);
  const auto axes = symbol_axes(g, 1);
  const CMat id = weyl_quantize(PolynomialSymbol::constant(1, 1.0).sample(axes), g).matrix;
  CHECK((id - CMat::Identity(g.points, g.points)).cwiseAbs().maxCoeff() <= 1e-8);

  const CMat x = weyl_quantize(PolynomialSymbol::coordinate(1, 0).sample(axes), g).matrix;
  CMat diag = CMat::Zero(g.points, g.points);
  for (int i = 0; i < g.points; ++i) diag(i, i) = g.coord(i);
  CHECK((x - diag).cwiseAbs().maxCoeff() <= 1e-10);

  // xi^w = (1/i) d/dx: plane waves well inside the band are eigenvectors.
  const CMat d = weyl_quantize(PolynomialSymbol::coordinate(1, 1).sample(axes), g).matrix;
  for (int m : {1, 3, -5}) {
    const double k = kPi * m / g.extent;
    CVec w(g.points);
    for (int j = 0; j < g.points; ++j) w[j] = std::polar(1.0, k * g.coord(j));
    CHECK((d * w - k * w).cwiseAbs().maxCoeff() <= 1e-6);
  }
}

TEST_CASE("Moyal product units and the position-momentum identity") {
  const GridSpec g = GridSpec::balanced(32);
  const auto axes = symbol_axes(g, 1);
  const GridSymbol a = gaussian(axes, 0.8, 0.3, -0.2, 0.5, 0.0);
  const GridSymbol one = PolynomialSymbol::constant(1, 1.0).sample(axes);
  CHECK(sup_diff(moyal_product(one, a), a) <= 1e-12);
  CHECK(sup_diff(moyal_product(a, one), a) <= 1e-12);

  const auto x = PolynomialSymbol::coordinate(1, 0), xi = PolynomialSymbol::coordinate(1, 1);
  const auto expect = x * xi + PolynomialSymbol::constant(1, cd(0, 0.5));
  CHECK(moyal_product(x, xi).distance(expect) == 0.0);
  // xi # x = x xi - i/2
  CHECK(moyal_product(xi, x).distance(x * xi - PolynomialSymbol::constant(1, cd(0, 0.5))) == 0.0);
}

TEST_CASE("Moyal product matches operator composition for Gaussians") {
  const GridSpec g = GridSpec::balanced(48);
  const auto axes = symbol_axes(g, 1);
  const GridSymbol a = gaussian(axes, 1.0, 0, 0), b = gaussian(axes, 0.7, 0.4, -0.3, 0.6, -0.4);
  const CMat lhs = weyl_quantize(moyal_product(a, b), g).matrix;
  const CMat rhs = weyl_quantize(a, g).matrix * weyl_quantize(b, g).matrix;
  CHECK((lhs - rhs).norm() / rhs.norm() <= 1e-6);
}

TEST_CASE("exponential symbols against the Moyal product") {
  const auto axes = symbol_axes(kPiGrid, 1);
  const GridSymbol a = gaussian(axes, 0.9, 0.2, 0.1);
  LinearForm l{Vec(2)};
  l.covector << 1.0, 0.0;  // l(x, xi) = x, H_l = J(1, 0) = (0, -1)

  SUBCASE("left rule is a shift in xi by -1/2 with the phase e^{ix}") {
    const GridSymbol closed = exp_symbol_left(l, a);
    const GridSymbol analytic = GridSymbol::sample(1, axes, Domain::PhaseSpace, [](const Vec& X) {
      const double dx = X[0] - 0.2, dxi = X[1] - 0.5 - 0.1;
      return std::polar(1.0, X[0]) * std::exp(-0.9 * (dx * dx + dxi * dxi));
    });
    CHECK(sup_diff(closed, analytic) <= 1e-8);
    CHECK(sup_diff(moyal_product(exp_linear(l, a), a), closed) <= 1e-6);
  }
  SUBCASE("conjugation is a pure translation") {
    const GridSymbol closed = exp_symbol_conjugate(l, a);
    const GridSymbol moyal = moyal_product(moyal_product(exp_linear(l, a), a), exp_linear(l.scaled(-1), a));
    CHECK(sup_diff(closed, moyal) <= 1e-6);
    const GridSymbol shifted = gaussian(axes, 0.9, 0.2, 1.1);
    CHECK(sup_diff(closed, shifted) <= 1e-8);
  }
  SUBCASE("sandwich") {
    LinearForm l2{Vec(2)};
    l2.covector << 2.0, 0.0;
    const GridSymbol half = exp_linear(l, a);
    CHECK(sup_diff(moyal_product(half, moyal_product(a, half)), exp_symbol_sandwich(l2, a)) <= 1e-6);
    const GridSymbol one = PolynomialSymbol::constant(1, 1.0).sample(axes);
    CHECK(sup_diff(exp_symbol_sandwich(l2, one), exp_linear(l2, one)) <= 1e-12);
  }
  SUBCASE("the zero form acts as the identity") {
    LinearForm zero{Vec::Zero(2)};
    CHECK(sup_diff(exp_symbol_left(zero, a), a) <= 1e-12);
    CHECK(sup_diff(exp_symbol_right(a, zero), a) <= 1e-12);
    CHECK(sup_diff(exp_symbol_sandwich(zero, a), a) <= 1e-12);
  }
  SUBCASE("off-grid frequencies are rejected") {
    LinearForm bad{Vec(2)};
    bad.covector << 0.123, 0.0;
    CHECK_THROWS_AS(exp_linear(bad, a), PreconditionError);
  }
}

TEST_CASE("Moyal guards") {
  const GridSpec g = GridSpec::balanced(16);
  const auto axes = symbol_axes(g, 1);
  GridSymbol checker(1, axes, Domain::PhaseSpace);
  for (std::size_t f = 0; f < checker.size(); ++f) {
    const auto idx = checker.unflatten(f);
    checker.values[f] = (idx[0] + idx[1]) % 2 ? -1.0 : 1.0;
  }
  CHECK_THROWS_AS(moyal_product(checker, checker), AliasingError);
  MoyalOptions tiny;
  tiny.memory_budget_bytes = 1024;
  const GridSymbol a = gaussian(axes, 1.0, 0, 0);
  CHECK_THROWS_AS(moyal_product(a, a, tiny), BudgetError);
  const GridSymbol other = gaussian(symbol_axes(GridSpec::balanced(20), 1), 1.0, 0, 0);
  CHECK_THROWS(moyal_product(a, other));
}
