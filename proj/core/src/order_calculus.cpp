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

#include "wsym/order_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "wsym/error.hpp"

namespace wsym {

namespace {

void require_pair(const OrderFunction& m, const char* what) {
  if (m.domain() != OrderDomain::EE)
    throw DimensionError(std::string(what) + " needs an order function on E x E*");
}

Mat j_inverse(int n) {
  SymplecticSpace s(n);
  return -s.hamilton();
}

Mat j_matrix(int n) { return SymplecticSpace(n).hamilton(); }

// Stack [top; bottom] of two maps E -> E into one map E -> E x E*.
Mat stack(const Mat& top, const Mat& bottom) {
  Mat s(top.rows() + bottom.rows(), top.cols());
  s << top, bottom;
  return s;
}

Vec stack(const Vec& a, const Vec& b) {
  Vec v(a.size() + b.size());
  v << a, b;
  return v;
}

double bracket(const Vec& v) { return std::sqrt(1.0 + v.squaredNorm()); }

}  // namespace

BracketProduct compose_integrand(const OrderFunction& m1, const OrderFunction& m2, const Vec& z,
                                 const Vec& zs) {
  require_pair(m1, "compose");
  require_pair(m2, "compose");
  if (m1.n() != m2.n()) throw DimensionError("compose: order functions over different n");
  const int n = m1.n();
  const int d = 2 * n;
  if (z.size() != d || zs.size() != d) throw DimensionError("compose: base point has wrong length");
  const Mat I = Mat::Identity(d, d);
  const Mat Ji = j_inverse(n);
  const Mat J = j_matrix(n);
  // (x, x*) = (x, z* + 2J^{-1}(x - z))
  Mat s1 = stack(I, Mat(2.0 * Ji));
  Vec t1 = stack(Vec::Zero(d), Vec(zs - 2.0 * Ji * z));
  // (y, y*) = (x + J z*/2, 2J^{-1}(z - x))
  Mat s2 = stack(I, Mat(-2.0 * Ji));
  Vec t2 = stack(Vec(0.5 * J * zs), Vec(2.0 * Ji * z));
  return m1.expression().pullback(s1, t1) * m2.expression().pullback(s2, t2);
}

ComposeResult compose(const OrderFunction& m1, const OrderFunction& m2, const Vec& z, const Vec& zs,
                      const QuadratureSpec& spec) {
  BracketProduct f = compose_integrand(m1, m2, z, zs);
  ComposeResult r;
  r.integral = integrate(f, spec);
  r.finite = r.integral.finite;
  r.value = r.integral.value;
  return r;
}

ComposeResult kernel_form_compose(const OrderFunction& m1, const OrderFunction& m2, const Vec& xt,
                                  const Vec& yt, const QuadratureSpec& spec) {
  require_pair(m1, "kernel_form_compose");
  require_pair(m2, "kernel_form_compose");
  const int n = m1.n();
  const int d = 2 * n;
  const Mat I = Mat::Identity(d, d);
  const Mat Ji = j_inverse(n);
  // q(xt, w) = ((xt + w)/2, J^{-1}(w - xt)),  q(w, yt) = ((w + yt)/2, J^{-1}(yt - w))
  Mat s1 = stack(Mat(0.5 * I), Ji);
  Vec t1 = stack(Vec(0.5 * xt), Vec(-Ji * xt));
  Mat s2 = stack(Mat(0.5 * I), Mat(-Ji));
  Vec t2 = stack(Vec(0.5 * yt), Vec(Ji * yt));
  BracketProduct f = m1.expression().pullback(s1, t1) * m2.expression().pullback(s2, t2);
  ComposeResult r;
  r.integral = integrate(f, spec);
  r.finite = r.integral.finite;
  r.value = r.integral.value;
  return r;
}

// Shifting (z, z*) by (t, t*) and the integration variable x by t changes the m1 argument by
// (t, t*) and the m2 argument by (t + Jt*/2, 0), whence C0(m1) C0(m2) (5/4)^{N0(m2)/2} <(t,t*)>^{N0(m1)+N0(m2)}.
TranslateReport compose_is_order_function_check(const OrderFunction& m1, const OrderFunction& m2,
                                                const Vec& z, const Vec& zs, int translates,
                                                double radius, std::uint64_t seed,
                                                const QuadratureSpec& spec) {
  TranslateReport rep;
  const auto& c1 = m1.certificate();
  const auto& c2 = m2.certificate();
  rep.n0 = std::max(c1.n0, c2.n0);
  rep.c_tilde = c1.c0 * c2.c0 * std::pow(1.25, 0.5 * c2.n0);
  ComposeResult base = compose(m1, m2, z, zs, spec);
  if (!base.finite) throw DivergenceError("composition diverges at the base point");
  rep.base_value = base.value;
  const int d = static_cast<int>(z.size());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif;
  for (int k = 0; k < translates; ++k) {
    Vec shift(2 * d);
    if (k == 0) {
      shift.setZero();
    } else {
      for (int i = 0; i < 2 * d; ++i) shift[i] = gauss(rng);
      shift = shift.normalized() * radius * std::pow(unif(rng), 1.0 / (2 * d));
    }
    ComposeResult moved = compose(m1, m2, Vec(z + shift.head(d)), Vec(zs + shift.tail(d)), spec);
    TranslateSample s;
    s.shift = shift;
    s.ratio = moved.value / base.value;
    double br = bracket(shift);
    s.allowed = rep.c_tilde * std::pow(br, 2.0 * rep.n0);
    rep.measured_constant = std::max(rep.measured_constant, s.ratio / std::pow(br, 2.0 * rep.n0));
    if (s.ratio > 1.0 && br > 1.0)
      rep.measured_exponent = std::max(rep.measured_exponent, std::log(s.ratio) / std::log(br));
    if (s.ratio > s.allowed * (1.0 + 1e-6)) rep.passed = false;
    rep.samples.push_back(s);
  }
  return rep;
}

std::optional<SeparableSpec> as_separable(const OrderFunction& m) {
  if (m.domain() != OrderDomain::EE) return std::nullopt;
  const int d = 2 * m.n();
  BracketProduct pos, cov;
  if (!m.expression().split(0, d, pos, cov)) return std::nullopt;
  // The covector part must be exactly c <x*>^{-N}.
  if (cov.atoms().size() != 1) return std::nullopt;
  const auto& a = cov.atoms().front();
  if (a.matrix.rows() != d || !a.matrix.isApprox(Mat::Identity(d, d)) || a.offset.cwiseAbs().maxCoeff() != 0.0)
    return std::nullopt;
  SeparableSpec s;
  s.decay = -a.exponent;
  for (const auto& b : pos.atoms()) s.growth += std::abs(b.exponent) * std::max(1.0, b.matrix.operatorNorm());
  s.position = BracketProduct(d, pos.constant() * cov.constant(), pos.atoms());
  return s;
}

BoundDescriptor separable_compose(const SeparableSpec& s1, const SeparableSpec& s2, int n) {
  const double N1 = s1.decay, N2 = s2.decay, M1 = s1.growth, M2 = s2.growth;
  const double dn = 2.0 * n;
  if (!(-(N1 + N2) + M1 + M2 < -dn))
    throw DivergenceError("separable composition diverges: -(N1+N2)+M1+M2 = " +
                          std::to_string(-(N1 + N2) + M1 + M2) + " is not below -2n");
  auto pos = [](double v) { return std::max(v, 0.0); };
  const double inner1 = -N1 + M2 + dn;
  const double inner2 = -N2 + M1 + dn;
  const double e1 = -N2 + M1 + pos(inner1);
  const double e2 = -N1 + M2 + pos(inner2);
  BoundDescriptor b;
  b.exponent = std::max(e1, e2);
  b.simplified = inner1 < 0.0 && inner2 < 0.0;
  // A vanishing inner argument costs a logarithm in the term it belongs to; it shows in the bound
  // only when that term attains the maximum.
  const double tol = 1e-12;
  b.log_factor = (std::abs(inner1) < tol && e1 >= b.exponent - tol) ||
                 (std::abs(inner2) < tol && e2 >= b.exponent - tol);
  if (s1.position && s2.position) b.position = *s1.position * *s2.position;
  return b;
}

SchurResult schur_certificate(const OrderFunction& m, const QuadratureSpec& spec, const SampleBox& box) {
  require_pair(m, "schur_certificate");
  const int n = m.n();
  const int d = 2 * n;
  const Mat I = Mat::Identity(d, d);
  const Mat Ji = j_inverse(n);
  SchurResult res;
  // Rows: y -> m((x + y)/2, J^{-1}(y - x)); columns: x -> the same with y fixed.
  auto row = [&](const Vec& x) {
    return m.expression().pullback(stack(Mat(0.5 * I), Ji), stack(Vec(0.5 * x), Vec(-Ji * x)));
  };
  auto col = [&](const Vec& y) {
    return m.expression().pullback(stack(Mat(0.5 * I), Mat(-Ji)), stack(Vec(0.5 * y), Vec(Ji * y)));
  };
  res.degree = row(Vec::Zero(d)).decay_degree();
  if (!(res.degree < -1e-9)) {
    res.finite = false;
    res.row_sup = res.col_sup = std::numeric_limits<double>::infinity();
    return res;
  }
  std::vector<Vec> samples;
  if (!m.depends_on_position()) {
    samples.push_back(Vec::Zero(d));
  } else {
    Box b = Box::cube(d, box.radius);
    for (const auto& p : Lattice::integer(d, box.step).points_in(b)) samples.push_back(p.coords);
  }
  res.row_sup = res.col_sup = -1.0;
  for (const auto& s : samples) {
    double r = integrate(row(s), spec).value;
    double c = integrate(col(s), spec).value;
    if (r > res.row_sup) res.row_sup = r, res.row_argmax = s;
    if (c > res.col_sup) res.col_sup = c, res.col_argmax = s;
  }
  return res;
}

FiberResult l1_fiber_certificate(const OrderFunction& m, const QuadratureSpec& spec) {
  require_pair(m, "l1_fiber_certificate");
  if (m.depends_on_position())
    throw PreconditionError("l1_fiber_certificate: the order function depends on x");
  const int d = 2 * m.n();
  BracketProduct pos, cov;
  m.expression().split(0, d, pos, cov);
  FiberResult r;
  r.integral = integrate(cov, spec);
  r.finite = r.integral.finite;
  r.value = r.integral.value;
  return r;
}

namespace {

// max over nonzero kernels K of sum of exponents of atoms that do not vanish on K.
double growth_degree(const BracketProduct& f) {
  const auto& atoms = f.atoms();
  const int k = static_cast<int>(atoms.size());
  const int d = f.dim();
  double best = 0.0;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    Mat kernel;
    if (mask == 0) {
      kernel = Mat::Identity(d, d);
    } else {
      int rows = 0;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) rows += static_cast<int>(atoms[i].matrix.rows());
      Mat st(rows, d);
      int r = 0;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) {
          st.middleRows(r, atoms[i].matrix.rows()) = atoms[i].matrix;
          r += static_cast<int>(atoms[i].matrix.rows());
        }
      Eigen::FullPivLU<Mat> lu(st);
      lu.setThreshold(1e-10);
      if (lu.rank() == d) continue;
      kernel = lu.kernel();
    }
    double g = 0.0;
    for (const auto& a : atoms)
      if ((a.matrix * kernel).cwiseAbs().maxCoeff() > 1e-10) g += a.exponent;
    best = std::max(best, g);
  }
  return best;
}

}  // namespace

double bracket_supremum(const BracketProduct& f, bool& finite) {
  finite = growth_degree(f) <= 1e-12;
  if (!finite) return std::numeric_limits<double>::infinity();
  if (f.atoms().empty()) return f.constant();
  QuadratureSpec spec;
  Integrand geo = make_integrand(f, spec);
  const int d = f.dim();
  const int per_axis = d <= 2 ? 81 : (d <= 4 ? 13 : 5);
  const double step = 2.0 * geo.core_radius / (per_axis - 1);
  Vec best_x = geo.center;
  double best = f(best_x);
  std::vector<int> idx(d, 0);
  Vec x(d);
  while (true) {
    for (int a = 0; a < d; ++a) x[a] = geo.center[a] - geo.core_radius + idx[a] * step;
    double v = f(x);
    if (v > best) best = v, best_x = x;
    int a = d - 1;
    while (a >= 0 && ++idx[a] == per_axis) idx[a--] = 0;
    if (a < 0) break;
  }
  // Pattern search around the best grid point.
  for (double h = step; h > 1e-9; h *= 0.5) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int a = 0; a < d; ++a)
        for (double sgn : {-1.0, 1.0}) {
          Vec y = best_x;
          y[a] += sgn * h;
          double v = f(y);
          if (v > best) best = v, best_x = y, moved = true;
        }
    }
  }
  // Suprema approached at infinity along coordinate and random directions.
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss;
  for (int k = 0; k < 64; ++k) {
    Vec dir(d);
    for (int a = 0; a < d; ++a) dir[a] = k < 2 * d ? (a == k / 2 ? (k % 2 ? -1.0 : 1.0) : 0.0) : gauss(rng);
    best = std::max(best, f(Vec(geo.center + 1e9 * dir.normalized())));
  }
  return best;
}

CpCriterionResult cp_criterion_integral(const OrderFunction& m, double p, const QuadratureSpec& spec) {
  require_pair(m, "cp_criterion_integral");
  if (!(p >= 1.0)) throw PreconditionError("cp_criterion_integral needs p >= 1");
  const int d = 2 * m.n();
  CpCriterionResult res;
  BracketProduct pos, cov;
  if (m.expression().split(0, d, pos, cov)) {
    // m = m_x(x) m_*(x*): the inner norm is |m_x|_{L^p} m_*(x*).
    double inner;
    if (std::isinf(p)) {
      bool fin = true;
      inner = bracket_supremum(pos, fin);
      if (!fin) {
        res.finite = false;
        res.reason = "inner sup-norm infinite";
        res.value = inner;
        return res;
      }
    } else {
      IntegralResult r = integrate(pos.power(p), spec);
      if (!r.finite) {
        res.finite = false;
        res.reason = "inner L^p(E) norm infinite";
        res.value = std::numeric_limits<double>::infinity();
        return res;
      }
      inner = std::pow(r.value, 1.0 / p);
    }
    IntegralResult outer = integrate(cov, spec);
    res.inner = inner;
    if (!outer.finite) {
      res.finite = false;
      res.reason = "outer integral over x* diverges";
      res.value = std::numeric_limits<double>::infinity();
      return res;
    }
    res.value = inner * outer.value;
    return res;
  }

  // Atoms mixing x and x*: nested quadrature on a coarse budget.
  res.factorized = false;
  QuadratureSpec inner_spec = spec;
  inner_spec.order = 4;
  inner_spec.order_step = 0;
  inner_spec.shell_tol = 1e-5;
  inner_spec.core_margin = 3.0;
  auto inner_norm = [&](const double* xs) {
    Vec v = Eigen::Map<const Vec>(xs, d);
    Mat s = Mat::Zero(2 * d, d);
    s.topRows(d).setIdentity();
    Vec t = Vec::Zero(2 * d);
    t.tail(d) = v;
    BracketProduct fiber = m.expression().pullback(s, t);
    if (std::isinf(p)) {
      bool fin = true;
      double sup = bracket_supremum(fiber, fin);
      return fin ? sup : std::numeric_limits<double>::infinity();
    }
    IntegralResult r = integrate(fiber.power(p), inner_spec);
    return r.finite ? std::pow(r.value, 1.0 / p) : std::numeric_limits<double>::infinity();
  };
  Vec zero = Vec::Zero(d);
  if (!std::isfinite(inner_norm(zero.data()))) {
    res.finite = false;
    res.reason = "inner norm infinite";
    res.value = std::numeric_limits<double>::infinity();
    return res;
  }
  // Decay of the inner norm in x*, read off between two large radii along a fixed direction.
  Vec dir = Vec::Ones(d).normalized();
  Vec a = 64.0 * dir, b = 128.0 * dir;
  double na = inner_norm(a.data()), nb = inner_norm(b.data());
  double degree = d + std::log2(nb / na);
  if (!(degree < -1e-3)) {
    res.finite = false;
    res.reason = "outer integral over x* diverges";
    res.value = std::numeric_limits<double>::infinity();
    return res;
  }
  Integrand g;
  g.dim = d;
  g.center = Vec::Zero(d);
  g.core_radius = 4.0;
  g.cell = 1.0;
  g.degree = degree;
  g.f = inner_norm;
  QuadratureSpec outer_spec = inner_spec;
  outer_spec.order_step = 2;
  outer_spec.refine_tol = 1e-3;
  res.value = integrate(g, outer_spec).value;
  return res;
}

}  // namespace wsym
