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

#include "wsym/error.hpp"
#include "wsym/order_function.hpp"

using namespace wsym;

TEST_CASE("evaluation of brackets") {
  const OrderFunction one = OrderFunction::point_bracket(1, 0.0);
  const OrderFunction m = OrderFunction::point_bracket(1, -3.0);
  Vec rho = Vec::Zero(2);
  CHECK(one(rho) == 1.0);
  CHECK(m(rho) == doctest::Approx(1.0));
  rho << 1.0, std::sqrt(2.0);
  CHECK(one(rho) == 1.0);
  CHECK(m(rho) == doctest::Approx(0.125));

  // <x>^2 <x*>^-1 on E x E*, coordinates (x, xi, x*, xi*).
  const OrderFunction p = OrderFunction::position_bracket(1, 2.0) * OrderFunction::covector_bracket(1, -1.0);
  Vec r(4);
  r << 1, 2, 2, 2;
  CHECK(p(r) == doctest::Approx(6.0 / 3.0));
  CHECK(p.scaled(2.5)(r) == doctest::Approx(5.0));
  CHECK(p.depends_on_position());
  CHECK(p.depends_on_covector());
  CHECK_FALSE(OrderFunction::covector_bracket(1, -3).depends_on_position());
}

TEST_CASE("Peetre certificates pass the randomized sweep") {
  for (double s : {-3.0, -1.0, 2.0, 4.5}) {
    const OrderFunction m = OrderFunction::point_bracket(1, s);
    CHECK(m.certificate().n0 == doctest::Approx(std::abs(s)));
    CHECK(m.certificate().c0 == doctest::Approx(std::pow(2.0, std::abs(s) / 2)));
    const SweepResult r = certify_order_axiom(m, 100000);
    CHECK(r.passed);
    CHECK(r.max_ratio <= m.certificate().c0);
  }
}

TEST_CASE("constants and the addition rule") {
  const OrderFunction c = OrderFunction::constant(OrderDomain::E, 1, 3.0);
  CHECK(c.certificate().c0 == 1.0);
  CHECK(certify_order_axiom(c, 1000).passed);

  Vec a(2);
  a << 1.5, -0.5;
  const OrderFunction shifted = OrderFunction::bracket(OrderDomain::E, 1, Mat::Identity(2, 2), -a, -2.0);
  const OrderFunction m = OrderFunction::point_bracket(1, 3.0) * shifted;
  CHECK(m.certificate().n0 == doctest::Approx(5.0));
  CHECK(certify_order_axiom(m, 100000).passed);
}

TEST_CASE("JSON round trip and errors") {
  const OrderFunction m = OrderFunction::position_bracket(1, -3) * OrderFunction::covector_bracket(1, -3).scaled(2.0);
  const OrderFunction back = OrderFunction::from_json(m.to_json());
  Vec r(4);
  r << 0.3, -1.0, 2.0, 0.5;
  CHECK(back(r) == doctest::Approx(m(r)).epsilon(1e-15));
  CHECK(back.domain() == OrderDomain::EE);
  CHECK(back.n() == 1);

  CHECK_THROWS_AS(OrderFunction::parse("{\"atom\": "), InputError);
  CHECK_THROWS_AS(OrderFunction::parse("{\"constant\": -1, \"n\": 1}"), InputError);
  CHECK_THROWS_AS(OrderFunction::parse("{\"constant\": 0, \"n\": 1}"), InputError);
  CHECK_THROWS_AS(OrderFunction::parse("{\"foo\": 1}"), InputError);
  CHECK_THROWS_AS(OrderFunction::parse(R"({"atom": {"exponent": 1, "affine": {"matrix": [[1, 0], [1]]}}})"),
                  InputError);
  const OrderFunction c = OrderFunction::parse(R"({"constant": 2.0, "n": 1, "domain": "E"})");
  CHECK(c(Vec::Zero(2)) == 2.0);
}
