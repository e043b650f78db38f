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

#include <random>
#include <set>

#include "wsym/error.hpp"
#include "wsym/phase_space.hpp"

using namespace wsym;

namespace {
Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}
}  // namespace

TEST_CASE("symplectic form on T*R") {
  const SymplecticSpace e(1);
  CHECK(e.form(v2(1, 0), v2(0, 1)) == doctest::Approx(-1.0));
  CHECK(e.form(v2(2, 3), v2(5, 7)) == doctest::Approx(1.0));
  CHECK(e.form(v2(2.5, -1.0), v2(2.5, -1.0)) == 0.0);
  CHECK_THROWS_AS(e.form(Vec::Zero(3), v2(1, 0)), DimensionError);
}

TEST_CASE("J is antisymmetric and squares to minus one") {
  for (int n : {1, 2, 3}) {
    const SymplecticSpace e(n);
    const Mat j = e.hamilton();
    CHECK((j.transpose() + j).norm() == 0.0);
    CHECK((j * j + Mat::Identity(2 * n, 2 * n)).norm() == 0.0);
    std::mt19937_64 rng(n);
    std::normal_distribution<double> g;
    for (int t = 0; t < 50; ++t) {
      Vec u(2 * n), w(2 * n);
      for (int i = 0; i < 2 * n; ++i) {
        u[i] = g(rng);
        w[i] = g(rng);
      }
      CHECK(e.form(u, w) == doctest::Approx(-e.form(w, u)).epsilon(1e-14));
      CHECK((e.apply_j(e.apply_j(u)) + u).norm() == 0.0);
      CHECK((e.apply_j_inverse(e.apply_j(u)) - u).norm() == 0.0);
    }
    for (int i = 0; i < 2 * n; ++i) {
      const Vec ei = Vec::Unit(2 * n, i);
      CHECK(std::abs(e.form(ei, e.apply_j(ei))) == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("chord map and its inverse") {
  const SymplecticSpace e(1);
  const Chord z = e.chord(v2(3, 4), v2(3, 4));
  CHECK((z.midpoint - v2(3, 4)).norm() == 0.0);
  CHECK(z.covector.norm() == 0.0);
  const Chord c = e.chord(v2(0, 0), v2(2, 0));
  CHECK((c.midpoint - v2(1, 0)).norm() == 0.0);
  CHECK((c.covector - v2(0, 2)).norm() == 0.0);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10, 10);
  const SymplecticSpace e2(2);
  for (int t = 0; t < 100; ++t) {
    Vec x(4), y(4);
    for (int i = 0; i < 4; ++i) {
      x[i] = u(rng);
      y[i] = u(rng);
    }
    const Chord q = e2.chord(x, y);
    const auto [xr, yr] = e2.chord_inverse(q.midpoint, q.covector);
    CHECK((xr - x).cwiseAbs().maxCoeff() <= 1e-14 * 10);
    CHECK((yr - y).cwiseAbs().maxCoeff() <= 1e-14 * 10);
    CHECK(q.stacked().size() == 8);
  }
}

TEST_CASE("lattice enumeration") {
  const Box unit{v2(-1, -1), v2(1, 1)};
  CHECK(Lattice::integer(2).points_in(unit).size() == 9);
  const auto two = Lattice::integer(2, 2.0).points_in(unit);
  REQUIRE(two.size() == 1);
  CHECK(two.front().coords.norm() == 0.0);

  SUBCASE("sheared basis against a brute-force sweep") {
    Mat b(2, 2);
    b << 1, 0, 1, 1;
    const Lattice lat(b, Vec::Zero(2));
    const Box box{v2(0, 0), v2(2, 2)};
    std::set<std::pair<int, int>> brute;
    for (int i = -20; i <= 20; ++i)
      for (int j = -20; j <= 20; ++j) {
        Vec k(2);
        k << i, j;
        if (box.contains(b * k)) brute.insert({i, j});
      }
    std::set<std::pair<int, int>> got;
    for (const auto& p : lat.points_in(box)) got.insert({p.index[0], p.index[1]});
    CHECK(got == brute);
  }

  SUBCASE("order is lexicographic in the integer coordinates") {
    const auto pts = Lattice::integer(2).points_in(Box::cube(2, 2.0));
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const auto& a = pts[i - 1].index;
      const auto& c = pts[i].index;
      CHECK((a[0] < c[0] || (a[0] == c[0] && a[1] < c[1])));
    }
  }

  CHECK_THROWS_AS(Lattice::integer(2).points_in(Box{v2(0, 0), v2(INFINITY, 1)}), PreconditionError);
  Mat singular = Mat::Zero(2, 2);
  CHECK_THROWS_AS(Lattice(singular, Vec::Zero(2)), PreconditionError);
}

TEST_CASE("grid description") {
  const GridSpec g = GridSpec::balanced(64);
  CHECK(g.extent * g.extent == doctest::Approx(std::numbers::pi * 32));
  CHECK(g.dual().extent == doctest::Approx(g.extent));
  CHECK(g.refined().points == 128);
  CHECK(g.refined().spacing() == doctest::Approx(g.spacing() / 2));
  CHECK(g.coord(0) == doctest::Approx(-g.extent));
  CHECK_THROWS(GridSpec(1.0, 7));
}
