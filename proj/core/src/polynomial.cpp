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

#include "wsym/polynomial.hpp"

#include <cmath>

#include "wsym/error.hpp"

namespace wsym {

PolynomialSymbol::PolynomialSymbol(int n) : n_(n) {
  if (n < 1) throw DimensionError("polynomial symbol needs n >= 1");
}

PolynomialSymbol PolynomialSymbol::constant(int n, cd c) {
  PolynomialSymbol p(n);
  p.add(Monomial(2 * n, 0), c);
  return p;
}

PolynomialSymbol PolynomialSymbol::coordinate(int n, int k) {
  if (k < 0 || k >= 2 * n) throw DimensionError("coordinate index out of range");
  PolynomialSymbol p(n);
  Monomial m(2 * n, 0);
  m[k] = 1;
  p.add(m, 1.0);
  return p;
}

void PolynomialSymbol::add(const Monomial& m, cd c) {
  if (c == cd{0.0, 0.0}) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cd{0.0, 0.0}) terms_.erase(it);
  }
}

bool PolynomialSymbol::is_zero(double tol) const {
  for (const auto& [m, c] : terms_)
    if (std::abs(c) > tol) return false;
  return true;
}

PolynomialSymbol PolynomialSymbol::derivative(int k) const {
  PolynomialSymbol out(n_);
  for (const auto& [m, c] : terms_) {
    if (m[k] == 0) continue;
    Monomial d = m;
    --d[k];
    out.add(d, c * static_cast<double>(m[k]));
  }
  return out;
}

PolynomialSymbol PolynomialSymbol::operator+(const PolynomialSymbol& o) const {
  PolynomialSymbol out = *this;
  for (const auto& [m, c] : o.terms_) out.add(m, c);
  return out;
}

PolynomialSymbol PolynomialSymbol::operator-(const PolynomialSymbol& o) const { return *this + o * cd{-1.0, 0.0}; }

PolynomialSymbol PolynomialSymbol::operator*(const PolynomialSymbol& o) const {
  if (o.n_ != n_) throw DimensionError("polynomials over different n");
  PolynomialSymbol out(n_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add(m, ca * cb);
    }
  return out;
}

PolynomialSymbol PolynomialSymbol::operator*(cd c) const {
  PolynomialSymbol out(n_);
  for (const auto& [m, v] : terms_) out.add(m, v * c);
  return out;
}

cd PolynomialSymbol::operator()(const Vec& x) const {
  cd s = 0.0;
  for (const auto& [m, c] : terms_) {
    double v = 1.0;
    for (std::size_t i = 0; i < m.size(); ++i) v *= std::pow(x[static_cast<int>(i)], m[i]);
    s += c * v;
  }
  return s;
}

GridSymbol PolynomialSymbol::sample(const std::vector<GridSpec>& axes) const {
  return GridSymbol::sample(n_, axes, Domain::PhaseSpace, [this](const Vec& x) { return (*this)(x); });
}

double PolynomialSymbol::distance(const PolynomialSymbol& o) const {
  double d = 0.0;
  for (const auto& [m, c] : (*this - o).terms_) d = std::max(d, std::abs(c));
  return d;
}

PolynomialSymbol moyal_product(const PolynomialSymbol& a, const PolynomialSymbol& b) {
  if (a.n() != b.n()) throw DimensionError("moyal_product: polynomials over different n");
  const int n = a.n();
  // (i/2) sigma(D_X, D_Y) = (i/2) sum_j (d_{x_j}^X d_{xi_j}^Y - d_{xi_j}^X d_{x_j}^Y), with D = -i d.
  using Pair = std::pair<PolynomialSymbol, PolynomialSymbol>;
  std::vector<std::pair<cd, Pair>> level{{cd{1.0, 0.0}, {a, b}}};
  PolynomialSymbol result(n);
  const cd half_i{0.0, 0.5};
  double factorial = 1.0;
  for (int k = 0; !level.empty(); ++k) {
    if (k > 0) factorial *= k;
    for (const auto& [c, pr] : level) result = result + (pr.first * pr.second) * (c / factorial);
    std::vector<std::pair<cd, Pair>> next;
    for (const auto& [c, pr] : level)
      for (int j = 0; j < n; ++j) {
        PolynomialSymbol ax = pr.first.derivative(j), axi = pr.first.derivative(n + j);
        PolynomialSymbol bx = pr.second.derivative(j), bxi = pr.second.derivative(n + j);
        if (!ax.is_zero() && !bxi.is_zero()) next.push_back({c * half_i, {ax, bxi}});
        if (!axi.is_zero() && !bx.is_zero()) next.push_back({-c * half_i, {axi, bx}});
      }
    level = std::move(next);
  }
  return result;
}

}  // namespace wsym
