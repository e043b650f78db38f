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

#include "wsym/bargmann.hpp"
#include "wsym/error.hpp"
#include "wsym/quantize.hpp"

using namespace wsym;

namespace {

const GridSpec kGrid = GridSpec::balanced(64);

double l2(const GridSymbol& u, const GridSpec& g) {
  double s = 0;
  for (const cd& v : u.values) s += std::norm(v);
  return std::sqrt(s * g.spacing());
}

CVec c1(cd z) {
  CVec x(1);
  x[0] = z;
  return x;
}

GridSymbol symbol_gaussian(const GridSpec& g, double alpha, double cx, double kx) {
  return GridSymbol::sample(1, symbol_axes(g, 1), Domain::PhaseSpace, [=](const Vec& X) {
    return std::exp(-alpha * ((X[0] - cx) * (X[0] - cx) + X[1] * X[1])) * std::polar(1.0, kx * X[0]);
  });
}

}  // namespace

TEST_CASE("standard setup") {
  const BargmannSetup s = BargmannSetup::standard(1);
  CHECK(s.is_standard());
  const SetupCheck c = setup_self_test(s);
  CHECK(c.passed);
  CHECK(c.weight_residual <= 1e-12);
  CHECK(c.lagrangian_residual <= 1e-12);
  CHECK(c.norm_closed_form == doctest::Approx(1.0 / (std::sqrt(2.0) * std::pow(std::numbers::pi, 0.75))));
  CHECK(calibrate(s, kGrid).norm == doctest::Approx(s.norm).epsilon(1e-10));

  // kappa_T(y, eta) = (y - i eta, eta), and iota inverts.
  Vec rho(2);
  rho << 0.7, -1.3;
  const CVec x = s.iota(rho);
  CHECK(std::abs(x[0] - cd(0.7, 1.3)) <= 1e-15);
  CHECK((s.iota_inverse(x) - rho).norm() <= 1e-15);
  CHECK(s.weight_at(x) == doctest::Approx(0.5 * 1.3 * 1.3));
  // Phi*(y) = Phi(conj y) for the conjugate weight.
  CHECK(s.weight_at(x.conjugate()) == doctest::Approx(s.weight_at(x)));
}

TEST_CASE("transform of the ground state") {
  const BargmannSetup s = BargmannSetup::standard(1);
  const GridSymbol u0 = hermite_function(0, kGrid);
  // e^{-Phi}|Tu0(x)| = c exp(-|x|^2 / 4): fit the exponent by least squares.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int k = 0;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int t = 0; t < 60; ++t, ++k) {
    const cd z(u(rng), u(rng));
    const double r2 = std::norm(z);
    const double y = std::log(std::abs(bargmann_transform_at(u0, s, c1(z))));
    sx += r2;
    sy += y;
    sxx += r2 * r2;
    sxy += r2 * y;
  }
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  CHECK(std::abs(-slope - 0.25) <= 1e-3);

  const GridSymbol zero(1, {kGrid}, Domain::Position);
  CHECK(bargmann_transform(zero, s).l2_norm() == 0.0);
}

TEST_CASE("unitarity and the adjoint") {
  const BargmannSetup s = BargmannSetup::standard(1);
  for (int k = 0; k <= 4; ++k) {
    const GridSymbol u = hermite_function(k, kGrid);
    const WeightedGridFunction w = bargmann_transform(u, s);
    CHECK(w.l2_norm() == doctest::Approx(l2(u, kGrid)).epsilon(1e-6));
    const GridSymbol back = bargmann_adjoint(w, s);
    double e = 0;
    for (std::size_t i = 0; i < u.size(); ++i) e = std::max(e, std::abs(back.values[i] - u.values[i]));
    CHECK(e <= 1e-6);
  }
  WeightedGridFunction zero = bargmann_transform(hermite_function(0, kGrid), s);
  std::fill(zero.values.begin(), zero.values.end(), cd(0.0));
  for (const cd& v : bargmann_adjoint(zero, s).values) CHECK(v == cd(0.0));
}

TEST_CASE("grid transform agrees with the pointwise transform and the conjugate transform") {
  const BargmannSetup s = BargmannSetup::standard(1);
  const GridSymbol u = coherent_state(0.7, -0.4, kGrid);
  const WeightedGridFunction w = bargmann_transform(u, s);
  const WeightedGridFunction wt = conjugate_transform(u, s);
  GridSymbol uc = u;
  for (auto& v : uc.values) v = std::conj(v);
  double e1 = 0, e2 = 0;
  for (std::size_t i = 0; i < w.values.size(); i += 41) {
    const CVec x = w.point(i);
    e1 = std::max(e1, std::abs(bargmann_transform_at(u, s, x) - w.values[i]));
    const cd ref = std::conj(bargmann_transform_at(uc, s, wt.point(i).conjugate()));
    e2 = std::max(e2, std::abs(ref - wt.values[i]));
  }
  CHECK(e1 <= 1e-12);
  CHECK(e2 <= 1e-12);
}

TEST_CASE("magnetic translations") {
  const BargmannSetup s = BargmannSetup::standard(1);
  const GridSymbol u = coherent_state(0.7, -0.4, kGrid);
  const WeightedGridFunction w = bargmann_transform(u, s);
  const ComplexGrid zg{kGrid, 1};

  SUBCASE("zero shift is the identity") {
    MagneticReport r;
    const WeightedGridFunction same = magnetic_translate(w, c1(0.0), c1(0.0), s, &r);
    for (std::size_t i = 0; i < w.values.size(); ++i) CHECK(same.values[i] == w.values[i]);
    CHECK(r.identity_residual == 0.0);
  }

  SUBCASE("random admissible shifts") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> cells(-8, 8);
    for (int t = 0; t < 10; ++t) {
      const CVec x0 = c1(cd(cells(rng) * zg.re_axis().spacing(), cells(rng) * zg.im_axis().spacing()));
      MagneticReport r;
      magnetic_translate(w, x0, s.admissible_covector(x0), s, &r);
      CHECK(r.identity_residual <= 1e-10);
      CHECK(r.reality_residual <= 1e-10);
      CHECK(std::abs(r.norm_after / r.norm_before - 1.0) <= 1e-8);
    }
  }

  SUBCASE("the real side sees a shifted coherent state") {
    const double a = 3 * kGrid.spacing(), b = -2 * kGrid.dual().spacing();
    const CVec x0 = c1(cd(a, b));
    const WeightedGridFunction wm = magnetic_translate(w, x0, s.admissible_covector(x0), s);
    // l = b y + a eta; e^{il} acts by t -> e^{i b (t + a/2)} u(t + a).
    const GridSymbol shifted = GridSymbol::sample(1, {kGrid}, Domain::Position, [&](const Vec& t) {
      const double tt = t[0] + a, d = tt - 0.7;
      return std::polar(1.0, b * (t[0] + a / 2)) * std::pow(std::numbers::pi, -0.25) *
             std::exp(cd(-0.5 * d * d, -0.4 * tt));
    });
    const GridSymbol back = bargmann_adjoint(wm, s);
    double e = 0;
    for (std::size_t i = 0; i < back.size(); ++i) e = std::max(e, std::abs(back.values[i] - shifted.values[i]));
    CHECK(e <= 1e-8);
  }

  SUBCASE("shifts off the grid are rejected") {
    CHECK_THROWS(magnetic_translate(w, c1(cd(0.123, 0.0)), c1(0.0), s));
  }
}

TEST_CASE("effective kernels") {
  const BargmannSetup s = BargmannSetup::standard(1);
  const GridSpec g = GridSpec::balanced(48);
  const auto axes = symbol_axes(g, 1);
  GridSymbol one(1, axes, Domain::PhaseSpace);
  std::fill(one.values.begin(), one.values.end(), cd(1.0));
  const EffectiveKernel k1 = effective_kernel(one, g, s);

  SUBCASE("a = 1 has Gaussian off-diagonal decay") {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int k = 0;
    for (double r = 0.5; r <= 4.0; r += 0.25, ++k) {
      const double y = std::log(std::abs(k1(c1(cd(0.2, -0.1)), c1(cd(0.2 + r, -0.1)))));
      sx += r * r;
      sy += y;
      sxx += r * r * r * r;
      sxy += r * r * y;
    }
    CHECK(-(k * sxy - sx * sy) / (k * sxx - sx * sx) > 0.1);
  }

  SUBCASE("the zero symbol has the zero kernel") {
    const EffectiveKernel z = effective_kernel(GridSymbol(1, axes, Domain::PhaseSpace), g, s);
    CHECK(z(c1(0.0), c1(cd(1, 1))) == cd(0.0));
    CHECK(kernel_compose(k1, z)(c1(cd(0.5, 0)), c1(0.0)) == cd(0.0));
  }

  SUBCASE("the projection kernel is idempotent") {
    const EffectiveKernel kk = kernel_compose(k1, k1);
    double diff = 0, scale = 0;
    for (double t = -2.5; t <= 2.5; t += 0.5) {
      const CVec x = c1(cd(t, 0.3 * t)), y = c1(cd(-0.5 * t, 1.0));
      diff = std::max(diff, std::abs(kk(x, y) - k1(x, y)));
      scale = std::max(scale, std::abs(k1(x, y)));
    }
    CHECK(diff <= 1e-4 * scale);
  }

  SUBCASE("the kernel acts like T a^w T*") {
    const GridSymbol a = symbol_gaussian(g, 0.3, 0.2, 0.5);
    const WeylOperator op = weyl_quantize(a, g);
    const EffectiveKernel k = EffectiveKernel::from_operator(op, s);
    const GridSymbol u = coherent_state(0.3, 0.2, g);
    const WeightedGridFunction w = bargmann_transform(u, s);
    GridSymbol au(1, {g}, Domain::Position);
    Eigen::Map<CVec>(au.values.data(), g.points) = op.matrix * Eigen::Map<const CVec>(u.values.data(), g.points);
    const ComplexGrid zg{g, 1};
    double e = 0, scale = 0;
    for (int i = 0; i < zg.per_dim(); i += 97) {
      const CVec x = c1(zg.point(i));
      if (std::abs(x[0].real()) > 4 || std::abs(x[0].imag()) > 4) continue;
      const auto row = k.row(x, zg);
      cd acc = 0;
      for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * w.values[j];
      acc *= zg.cell_area();
      const cd ref = bargmann_transform_at(au, s, x);
      e = std::max(e, std::abs(acc - ref));
      scale = std::max(scale, std::abs(ref));
    }
    CHECK(e <= 1e-8 * scale);
  }

  SUBCASE("composition follows the Moyal product") {
    const GridSymbol a = symbol_gaussian(g, 1.0, 0.0, 0.0), b = symbol_gaussian(g, 0.7, 0.4, -0.6);
    const EffectiveKernel kc = kernel_compose(effective_kernel(a, g, s), effective_kernel(b, g, s));
    const EffectiveKernel km = effective_kernel(moyal_product(a, b), g, s);
    double diff = 0, scale = 0;
    for (double t = -2.5; t <= 2.5; t += 0.25) {
      const CVec x = c1(cd(t, -0.2 * t)), y = c1(cd(0.4 * t, 0.5));
      diff = std::max(diff, std::abs(kc(x, y) - km(x, y)));
      scale = std::max(scale, std::abs(km(x, y)));
    }
    CHECK(diff <= 1e-4 * scale);
  }
}

TEST_CASE("membership on the Bargmann side") {
  // Symbols on E = R^2 go through the transform of the doubled dimension.
  const BargmannSetup s = BargmannSetup::standard(2);
  const GridSpec g = GridSpec::balanced(32);
  const OrderFunction m = OrderFunction::covector_bracket(1, -4);
  CHECK(membership_via_bargmann(GridSymbol(1, {g, g}, Domain::PhaseSpace), m, s).norm == 0.0);

  // A Gaussian packet centred at c with frequency k is even about (c, k), so the transform peaks at c - i k.
  Vec c(2), k(2);
  c << 1.2, -0.5;
  k << -0.8, 0.6;
  const GridSymbol u = GridSymbol::sample(1, {g, g}, Domain::PhaseSpace, [&](const Vec& x) {
    return std::exp(-(x - c).squaredNorm()) * std::polar(1.0, k.dot(x));
  });
  const MembershipReport r = membership_via_bargmann(u, OrderFunction::constant(OrderDomain::EE, 1, 1.0), s);
  REQUIRE(!r.ratios.empty());
  const auto best = std::max_element(r.ratios.begin(), r.ratios.end()) - r.ratios.begin();
  const Vec& p = r.points[best];
  const double step = 2 * g.spacing() + 1e-12, dstep = 2 * g.dual().spacing() + 1e-12;
  CHECK((p.head(2) - c).cwiseAbs().maxCoeff() <= step);
  CHECK((p.tail(2) - k).cwiseAbs().maxCoeff() <= dstep);
}

TEST_CASE("two-dimensional smoke test") {
  const BargmannSetup s = BargmannSetup::standard(2);
  CHECK(setup_self_test(s).passed);
  const GridSpec g = GridSpec::balanced(24);
  const GridSymbol u = GridSymbol::sample(2, {g, g}, Domain::Position, [](const Vec& t) {
    return cd(std::exp(-t.squaredNorm()));
  });
  const WeightedGridFunction w = bargmann_transform(u, s);
  double un = 0;
  for (const cd& v : u.values) un += std::norm(v);
  un = std::sqrt(un * g.spacing() * g.spacing());
  CHECK(w.l2_norm() == doctest::Approx(un).epsilon(1e-6));
}
