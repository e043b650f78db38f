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
#include <limits>
#include <random>

#include "wsym/error.hpp"
#include "wsym/schatten.hpp"

using namespace wsym;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("Schatten norms of a diagonal matrix") {
  CMat d = CMat::Zero(3, 3);
  d(0, 0) = 1;
  d(1, 1) = cd(0, 2);
  d(2, 2) = -3;
  CHECK(cp_norm(d, 1.0) == doctest::Approx(6.0));
  CHECK(cp_norm(d, 2.0) == doctest::Approx(std::sqrt(14.0)));
  CHECK(cp_norm(d, kInf) == doctest::Approx(3.0));
  CHECK(cp_norm(CMat::Zero(4, 4), 1.0) == 0.0);
  CHECK(lp_of({3.0, 4.0}, 2.0) == doctest::Approx(5.0));
  CHECK(lp_of({3.0, -4.0}, kInf) == doctest::Approx(4.0));
}

TEST_CASE("Schatten norms are unitarily invariant and ordered in p") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  for (int t = 0; t < 10; ++t) {
    CMat a(6, 6), h(6, 6);
    for (int i = 0; i < 36; ++i) {
      a(i) = cd(nd(rng), nd(rng));
      h(i) = cd(nd(rng), nd(rng));
    }
    const CMat u = Eigen::HouseholderQR<CMat>(h).householderQ();
    for (double p : {1.0, 2.0, kInf}) CHECK(cp_norm(u * a, p) == doctest::Approx(cp_norm(a, p)).epsilon(1e-10));
    CHECK(cp_norm(a, 1.0) >= cp_norm(a, 2.0));
    CHECK(cp_norm(a, 2.0) >= cp_norm(a, kInf));
    CHECK(cp_norm(a, 2.0) == doctest::Approx(a.norm()).epsilon(1e-10));
  }
}

TEST_CASE("single-diagonal matrices") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> nd;
  for (int d : {-5, -1, 0, 2, 7}) {
    CMat m = CMat::Zero(12, 12);
    std::vector<double> mods;
    for (int i = 0; i < 12; ++i)
      if (i + d >= 0 && i + d < 12) {
        m(i, i + d) = cd(nd(rng), nd(rng));
        mods.push_back(std::abs(m(i, i + d)));
      }
    for (double p : {1.0, 1.5, 2.0, kInf}) CHECK(cp_norm(m, p) == doctest::Approx(lp_of(mods, p)).epsilon(1e-12));
  }
}

TEST_CASE("diagonal lattice bounds") {
  const Lattice lat = Lattice::integer(2, 1.0);
  const OrderFunction decaying = OrderFunction::position_bracket(1, -3) * OrderFunction::covector_bracket(1, -3);
  const DiagonalBound b = diagonal_cp_bound(decaying, lat, 2.0);
  CHECK(b.finite);
  CHECK(b.value > 0.0);
  CHECK(b.value >= b.retained);
  CHECK(b.shell_ratio < 1.0);
  for (std::size_t k = 1; k < b.partial.size(); ++k) CHECK(b.partial[k] >= b.partial[k - 1]);

  const DiagonalBound flat = diagonal_cp_bound(OrderFunction::constant(OrderDomain::EE, 1, 1.0), lat, 2.0);
  CHECK_FALSE(flat.finite);

  // A larger exponent p cannot increase the inner norm.
  CHECK(diagonal_cp_bound(decaying, lat, kInf).value <= diagonal_cp_bound(decaying, lat, 1.0).value * (1 + 1e-12));
}

TEST_CASE("matrix hypothesis") {
  const Lattice lat = Lattice::integer(2, 1.0);
  const OrderFunction m = OrderFunction::position_bracket(1, -3) * OrderFunction::covector_bracket(1, -3);
  for (double p : {1.0, 2.0, kInf}) {
    const HypothesisReport h = verify_matrix_hypothesis(m, lat, p, 3, 10);
    CHECK(h.holds);
    CHECK(h.max_ratio <= 1.0 + 1e-12);
    CHECK(h.max_ratio > 0.0);
  }
  std::uint64_t seed = 4;
  const GaborMatrix g = majorant_matrix(m, lat, 2, &seed);
  CHECK(g.dominated_by(m));
  CHECK(g.points.size() == 25 * 1);
  CHECK(box_points(lat, 2).size() == 25);
}

TEST_CASE("trace-class bound on single symbols") {
  const GridSpec g = GridSpec::balanced(32);
  const auto axes = symbol_axes(g, 1);
  const OrderFunction m = OrderFunction::position_bracket(1, -3) * OrderFunction::covector_bracket(1, -3);
  const WindowFamily w = build_partition(Lattice::integer(4, 2.0), 1.0);
  const Lattice index = Lattice::integer(2, 1.0);

  const GridSymbol zero(1, axes, Domain::PhaseSpace);
  const CpBoundReport rz = cp_bound_check(zero, g, m, w, index);
  CHECK(rz.measured == 0.0);
  CHECK(rz.ratio == 0.0);

  const GridSymbol gauss = GridSymbol::sample(1, axes, Domain::PhaseSpace, [](const Vec& x) {
    return cd(std::exp(-(x[0] * x[0] + x[1] * x[1])));
  });
  const CpBoundReport r = cp_bound_check(gauss, g, m, w, index);
  // (exp(-x^2 - xi^2))^w has trace norm 1/2 (a scaled projection onto the ground state).
  CHECK(r.measured == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(r.stilde > 0.0);
  CHECK(r.bound > 0.0);
  CHECK(r.ratio > 0.0);
  CHECK(std::isfinite(r.ratio));

  CpBoundOptions opts;
  opts.constant = 0.5 * r.ratio;
  CHECK_FALSE(cp_bound_check(gauss, g, m, w, index, opts).holds);
  opts.constant = 2.0 * r.ratio;
  CHECK(cp_bound_check(gauss, g, m, w, index, opts).holds);
}

TEST_CASE("matrix hypothesis on a coarser lattice") {
  const OrderFunction m = OrderFunction::position_bracket(1, -3) * OrderFunction::covector_bracket(1, -3);
  const HypothesisReport unit = verify_matrix_hypothesis(m, Lattice::integer(2, 1.0), 1.0, 3, 5);
  const HypothesisReport coarse = verify_matrix_hypothesis(m, Lattice::integer(2, 1.5), 1.0, 3, 5);
  CHECK(unit.holds);
  CHECK(coarse.holds);
  CHECK(coarse.max_ratio <= 1.0 + 1e-12);
}
