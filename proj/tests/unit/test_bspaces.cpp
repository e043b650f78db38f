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

#include "wsym/bspaces.hpp"
#include "wsym/error.hpp"

using namespace wsym;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

LatticeFunction random_function(std::mt19937_64& rng, int dim, int width) {
  std::uniform_int_distribution<int> lo(-3, 3);
  std::normal_distribution<double> nd;
  std::vector<int> l(dim), s(dim, width);
  for (int& v : l) v = lo(rng);
  LatticeFunction f(l, s);
  for (auto& v : f.values) v = cd(nd(rng), nd(rng));
  return f;
}

double abs_sum(const LatticeFunction& f) {
  double s = 0;
  for (const cd& v : f.values) s += std::abs(v);
  return s;
}

}  // namespace

TEST_CASE("norms of simple sequences") {
  const LatticeFunction d = LatticeFunction::delta(2);
  for (double p : {1.0, 2.0, 3.5, kInf}) CHECK(seq_norm(d, SeqSpaceSpec::lp(p)) == doctest::Approx(1.0));
  CHECK(seq_norm(d, SeqSpaceSpec::mixed(1.0, kInf, 1)) == doctest::Approx(1.0));

  LatticeFunction ones({0}, {8});
  std::fill(ones.values.begin(), ones.values.end(), cd(1.0));
  for (double p : {1.0, 2.0, 4.0}) CHECK(seq_norm(ones, SeqSpaceSpec::lp(p)) == doctest::Approx(std::pow(8.0, 1.0 / p)));
  CHECK(seq_norm(ones, SeqSpaceSpec::lp(kInf)) == doctest::Approx(1.0));

  // l^{1,inf}: sup over the first coordinate of the l^1 norm over the second.
  LatticeFunction u({0, 0}, {2, 3});
  u.values = {1, 2, 3, 4, -5, 6};
  CHECK(seq_norm(u, SeqSpaceSpec::mixed(1.0, kInf, 1)) == doctest::Approx(15.0));
  CHECK(seq_norm(u, SeqSpaceSpec::mixed(kInf, 1.0, 1)) == doctest::Approx(9.0));
  CHECK(seq_norm(u, SeqSpaceSpec::mixed(2.0, 2.0, 1)) == doctest::Approx(seq_norm(u, SeqSpaceSpec::lp(2.0))));
}

TEST_CASE("translation invariance and solidity") {
  std::mt19937_64 rng(5);
  const std::vector<SeqSpaceSpec> family = {SeqSpaceSpec::lp(1.0), SeqSpaceSpec::lp(2.0), SeqSpaceSpec::lp(kInf),
                                            SeqSpaceSpec::mixed(1.0, kInf, 1), SeqSpaceSpec::mixed(2.0, 1.0, 1)};
  for (const auto& b : family) {
    for (int t = 0; t < 10; ++t) {
      const LatticeFunction u = random_function(rng, 2, 4);
      CHECK(seq_norm(u.translated({3, -2}), b) == doctest::Approx(seq_norm(u, b)));
      CHECK(seq_norm(u.abs(), b) == doctest::Approx(seq_norm(u, b)));
      LatticeFunction smaller = u;
      for (auto& v : smaller.values) v *= 0.5;
      CHECK(seq_norm(smaller, b) <= seq_norm(u, b));
    }
  }
}

TEST_CASE("convolution") {
  LatticeFunction f({0}, {2});
  f.values = {1, 1};
  LatticeFunction u({0}, {2});
  u.values = {1, 2};
  const LatticeFunction c = convolve(f, u);
  REQUIRE(c.size() == 3);
  CHECK(c.at({0}) == cd(1));
  CHECK(c.at({1}) == cd(3));
  CHECK(c.at({2}) == cd(2));
  CHECK(c.at({7}) == cd(0));

  const LatticeFunction d = LatticeFunction::delta(1);
  const LatticeFunction same = convolve(d, u);
  CHECK(same.at({0}) == u.at({0}));
  CHECK(same.at({1}) == u.at({1}));

  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const LatticeFunction ff = random_function(rng, 2, 3), uu = random_function(rng, 2, 4);
    const SeqSpaceSpec b = t % 2 ? SeqSpaceSpec::lp(2.0) : SeqSpaceSpec::mixed(1.0, kInf, 1);
    CHECK(seq_norm(convolve(ff, uu), b) <= abs_sum(ff) * seq_norm(uu, b) * (1 + 1e-12));
  }
  const ConvolveReport r = convolve_bound_check(random_function(rng, 2, 3), random_function(rng, 2, 4),
                                                SeqSpaceSpec::lp(1.0), 10);
  CHECK(r.holds);
  CHECK(r.dominated_max_ratio <= 1.0 + 1e-12);
}

TEST_CASE("precedence of sequence spaces") {
  CHECK(precedes_rule(SeqSpaceSpec::lp(1.0), SeqSpaceSpec::lp(2.0)));
  CHECK(precedes_rule(SeqSpaceSpec::lp(2.0), SeqSpaceSpec::lp(2.0)));
  CHECK_FALSE(precedes_rule(SeqSpaceSpec::lp(2.0), SeqSpaceSpec::lp(1.0)));

  const PrecedesReport down = precedes_check(SeqSpaceSpec::lp(1.0), SeqSpaceSpec::lp(2.0), 5, 2, 20);
  CHECK(down.rule);
  CHECK_FALSE(down.falsified);

  const PrecedesReport up = precedes_check(SeqSpaceSpec::lp(2.0), SeqSpaceSpec::lp(1.0), 5, 2, 20);
  // The rule rejects it, and the growing-support witness shows the ratio is unbounded.
  CHECK_FALSE(up.rule);
  CHECK(up.consistent);
  CHECK(up.witness_grows);

  const PrecedesReport self = precedes_check(SeqSpaceSpec::lp(kInf), SeqSpaceSpec::lp(kInf), 5, 2, 20);
  CHECK(self.rule);
  CHECK_FALSE(self.falsified);
}

TEST_CASE("sequence space JSON round trip") {
  for (const auto& b : {SeqSpaceSpec::lp(1.0), SeqSpaceSpec::lp(kInf), SeqSpaceSpec::mixed(2.0, kInf, 1)}) {
    const SeqSpaceSpec c = SeqSpaceSpec::from_json(b.to_json());
    CHECK(c.kind == b.kind);
    CHECK(c.p == b.p);
    CHECK(c.q == b.q);
    CHECK(c.split == b.split);
  }
}

TEST_CASE("amalgam norms") {
  const GridSpec g(4.0, 16);
  const GridSymbol one = GridSymbol::sample(1, {g}, Domain::Position, [](const Vec&) { return cd(1.0); });
  AmalgamSpec spec;
  spec.b = SeqSpaceSpec::lp(kInf);
  spec.spacing = Vec::Constant(1, 1.0);
  CHECK(amalgam_norm(one, spec) == doctest::Approx(1.0));

  const GridSymbol bump = GridSymbol::sample(1, {g}, Domain::Position, [](const Vec& x) {
    return cd(std::abs(x[0] - 0.5) < 1e-9 ? 3.0 : 0.0);
  });
  CHECK(amalgam_norm(bump, spec) == doctest::Approx(3.0));
  spec.b = SeqSpaceSpec::lp(1.0);
  // Cells are half-open, so the point 0.5 belongs to the cell of 1 only.
  CHECK(amalgam_norm(bump, spec) == doctest::Approx(3.0));
  // Lattice points -4..4 all have a grid point in their cell.
  CHECK(amalgam_norm(one, spec) == doctest::Approx(9.0));
  spec.window = AmalgamSpec::Window::Support;
  CHECK(amalgam_norm(bump, spec) == doctest::Approx(3.0 * 2));
}

TEST_CASE("kernel action bound") {
  const GridSpec g(4.0, 16);
  const int k = g.points;
  CMat kern(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) kern(i, j) = std::exp(-std::abs(g.coord(i) - g.coord(j)));
  std::vector<cd> u(k);
  for (int i = 0; i < k; ++i) u[i] = std::exp(-g.coord(i) * g.coord(i));
  const Weight one = [](const Vec&) { return 1.0; };
  const SeqSpaceSpec l1 = SeqSpaceSpec::lp(1.0);
  const KernelActionReport r = kernel_action(kern, u, {g}, one, one, one, SeqSpaceSpec::mixed(kInf, 1.0, 1), l1, l1, 1.0, 1.0);
  CHECK(r.holds);
  CHECK(r.lhs <= r.rhs);
  REQUIRE(r.k3.size() == static_cast<std::size_t>(k));
  cd direct = 0;
  for (int j = 0; j < k; ++j) direct += kern(3, j) * u[j];
  CHECK(std::abs(r.k3[3] - direct * g.spacing()) <= 1e-12);
}

TEST_CASE("composition constants") {
  const Weight one = [](const Vec&) { return 1.0; };
  const Weight decay = [](const Vec& x) { return std::pow(1.0 + x.squaredNorm(), -2.0); };
  const SeqSpaceSpec l1 = SeqSpaceSpec::lp(1.0), l2 = SeqSpaceSpec::lp(2.0);

  const ComposeConstantResult a = compose_constant_estimate(one, l1, one, l1, one, l1, 1, 4, 10);
  CHECK_FALSE(a.diverges);
  CHECK(a.constant <= 1.0 + 1e-9);
  CHECK(a.constant > 0.0);

  const ComposeConstantResult b = compose_constant_estimate(decay, l1, one, l2, one, l2, 1, 4, 10);
  CHECK_FALSE(b.diverges);
  CHECK(std::isfinite(b.constant));
}
