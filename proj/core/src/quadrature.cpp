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

#include "wsym/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wsym/error.hpp"

namespace wsym {

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(order, 0.0);
  weights.assign(order, 0.0);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) p0 = 1.0;
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[order - 1 - i] = x;
    weights[i] = weights[order - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

namespace {

struct Interval {
  double a, b;
  int level;
};

// Integrates over one shell level: tensor cells of the 1D partition whose largest level is `level`.
double shell_sum(const Integrand& g, const std::vector<Interval>& parts, int level,
                 const std::vector<double>& nodes, const std::vector<double>& weights) {
  const int d = g.dim;
  const int q = static_cast<int>(nodes.size());
  std::vector<int> use;
  for (int i = 0; i < static_cast<int>(parts.size()); ++i)
    if (parts[i].level <= level) use.push_back(i);
  const int m = static_cast<int>(use.size());
  std::vector<int> cell(d, 0), node(d, 0);
  std::vector<double> x(d);
  double total = 0.0;
  while (true) {
    int top = 0;
    for (int a = 0; a < d; ++a) top = std::max(top, parts[use[cell[a]]].level);
    if (top == level) {
      double cell_sum = 0.0;
      std::fill(node.begin(), node.end(), 0);
      while (true) {
        double w = 1.0;
        for (int a = 0; a < d; ++a) {
          const Interval& iv = parts[use[cell[a]]];
          double half = 0.5 * (iv.b - iv.a);
          x[a] = g.center[a] + iv.a + half * (nodes[node[a]] + 1.0);
          w *= half * weights[node[a]];
        }
        cell_sum += w * g.f(x.data());
        int a = d - 1;
        while (a >= 0 && ++node[a] == q) node[a--] = 0;
        if (a < 0) break;
      }
      total += cell_sum;
    }
    int a = d - 1;
    while (a >= 0 && ++cell[a] == m) cell[a--] = 0;
    if (a < 0) break;
  }
  return total;
}

IntegralResult run_level(const Integrand& g, int order, const QuadratureSpec& spec) {
  std::vector<double> nodes, weights;
  gauss_legendre(order, nodes, weights);
  const int core_cells = std::max(1, static_cast<int>(std::ceil(2.0 * g.core_radius / g.cell)));
  const double r0 = 0.5 * core_cells * g.cell;
  std::vector<Interval> parts;
  for (int i = 0; i < core_cells; ++i) parts.push_back({-r0 + i * g.cell, -r0 + (i + 1) * g.cell, 0});

  IntegralResult res;
  res.degree = g.degree;
  double total = shell_sum(g, parts, 0, nodes, weights);
  double radius = r0;
  double last = total;
  const double ratio = std::pow(2.0, g.degree);
  for (int k = 1;; ++k) {
    double next = 2.0 * radius;
    // Each shell doubles the box; its new 1D pieces are split in two so cells stay proportionate.
    double mid = 1.5 * radius;
    parts.push_back({-next, -mid, k});
    parts.push_back({-mid, -radius, k});
    parts.push_back({radius, mid, k});
    parts.push_back({mid, next, k});
    last = shell_sum(g, parts, k, nodes, weights);
    total += last;
    radius = next;
    res.shells = k;
    bool small = std::abs(last) <= spec.shell_tol * std::abs(total);
    if ((small && k >= 3) || radius >= spec.max_radius) break;
  }
  res.tail = last * ratio / (1.0 - ratio);
  res.value = total + res.tail;
  res.radius = radius;
  return res;
}

}  // namespace

IntegralResult integrate(const Integrand& g, const QuadratureSpec& spec) {
  if (!(g.degree < 0.0)) {
    IntegralResult r;
    r.finite = false;
    r.degree = g.degree;
    r.value = std::numeric_limits<double>::infinity();
    return r;
  }
  IntegralResult coarse = run_level(g, spec.order, spec);
  IntegralResult fine = run_level(g, spec.order + spec.order_step, spec);
  double scale = std::max(std::abs(fine.value), 1e-300);
  fine.refinement_gap = std::abs(fine.value - coarse.value) / scale;
  if (fine.refinement_gap > spec.refine_tol)
    throw ConvergenceError("quadrature levels disagree by " + std::to_string(fine.refinement_gap) +
                           " (relative)");
  return fine;
}

Integrand make_integrand(const BracketProduct& f, const QuadratureSpec& spec) {
  Integrand g;
  g.dim = f.dim();
  g.degree = f.decay_degree();
  g.f = [f](const double* x) { return f.eval(x); };
  const int d = g.dim;
  std::vector<Vec> centers;
  double max_norm = 1.0;
  for (const auto& a : f.atoms()) {
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(a.matrix);
    centers.push_back(cod.solve(-a.offset));
    max_norm = std::max(max_norm, a.matrix.operatorNorm());
  }
  g.center = Vec::Zero(d);
  for (const auto& c : centers) g.center += c;
  if (!centers.empty()) g.center /= static_cast<double>(centers.size());
  double spread = 0.0;
  for (const auto& c : centers) spread = std::max(spread, (c - g.center).cwiseAbs().maxCoeff());
  g.core_radius = spread + spec.core_margin;
  g.cell = spec.cell > 0.0 ? spec.cell : 0.5 / max_norm;
  // Keep the core within budget by coarsening cells in high dimension.
  while (std::pow(2.0 * g.core_radius / g.cell, d) > static_cast<double>(spec.max_core_cells)) g.cell *= 1.5;
  return g;
}

IntegralResult integrate(const BracketProduct& f, const QuadratureSpec& spec) {
  return integrate(make_integrand(f, spec), spec);
}

}  // namespace wsym
