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

#include "wsym/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wsym/error.hpp"
#include "wsym/fft.hpp"

namespace wsym {

std::string to_string(Domain d) {
  switch (d) {
    case Domain::Position: return "F";
    case Domain::PhaseSpace: return "E";
    case Domain::PhasePair: return "ExE*";
  }
  return "E";
}

Domain domain_from_string(const std::string& s) {
  if (s == "F" || s == "position") return Domain::Position;
  if (s == "E" || s == "phase_space") return Domain::PhaseSpace;
  if (s == "ExE*" || s == "phase_pair") return Domain::PhasePair;
  throw InputError("unknown domain tag '" + s + "'");
}

GridSymbol::GridSymbol(int n_, std::vector<GridSpec> axes_, Domain domain_)
    : n(n_), axes(std::move(axes_)), domain(domain_) {
  std::size_t total = 1;
  for (const auto& a : axes) total *= static_cast<std::size_t>(a.points);
  values.assign(total, cd{0.0, 0.0});
}

GridSymbol GridSymbol::sample(int n, std::vector<GridSpec> axes, Domain domain, const Sampler& f) {
  GridSymbol g(n, std::move(axes), domain);
  for (std::size_t i = 0; i < g.size(); ++i) g.values[i] = f(g.point(i));
  return g;
}

std::vector<int> GridSymbol::shape() const {
  std::vector<int> s;
  for (const auto& a : axes) s.push_back(a.points);
  return s;
}

std::vector<int> GridSymbol::unflatten(std::size_t flat) const {
  std::vector<int> idx(axes.size());
  for (int k = rank() - 1; k >= 0; --k) {
    idx[k] = static_cast<int>(flat % axes[k].points);
    flat /= axes[k].points;
  }
  return idx;
}

std::size_t GridSymbol::flatten(const std::vector<int>& index) const {
  std::size_t flat = 0;
  for (int k = 0; k < rank(); ++k) flat = flat * axes[k].points + index[k];
  return flat;
}

Vec GridSymbol::point(std::size_t flat) const {
  auto idx = unflatten(flat);
  Vec p(rank());
  for (int k = 0; k < rank(); ++k) p[k] = axes[k].coord(idx[k]);
  return p;
}

double GridSymbol::cell_volume() const {
  double v = 1.0;
  for (const auto& a : axes) v *= a.spacing();
  return v;
}

bool GridSymbol::same_grid(const GridSymbol& other) const {
  if (rank() != other.rank()) return false;
  for (int k = 0; k < rank(); ++k)
    if (!axes[k].matches(other.axes[k])) return false;
  return true;
}

double GridSymbol::max_abs() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

double GridSymbol::boundary_max() const {
  double m = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    auto idx = unflatten(i);
    bool edge = false;
    for (int k = 0; k < rank(); ++k)
      if (idx[k] == 0 || idx[k] == axes[k].points - 1) edge = true;
    if (edge) m = std::max(m, std::abs(values[i]));
  }
  return m;
}

double GridSymbol::lp_norm(double p) const {
  if (std::isinf(p)) return max_abs();
  double s = 0.0;
  for (const auto& v : values) s += std::pow(std::abs(v), p);
  return std::pow(s * cell_volume(), 1.0 / p);
}

GridSymbol& GridSymbol::operator+=(const GridSymbol& other) {
  if (!same_grid(other)) throw DimensionError("grid symbols live on different grids");
  for (std::size_t i = 0; i < size(); ++i) values[i] += other.values[i];
  return *this;
}

GridSymbol GridSymbol::operator*(cd factor) const {
  GridSymbol out = *this;
  for (auto& v : out.values) v *= factor;
  return out;
}

GridSymbol GridSymbol::operator+(const GridSymbol& other) const {
  GridSymbol out = *this;
  out += other;
  return out;
}

std::vector<GridSpec> symbol_axes(const GridSpec& xgrid, int n) {
  std::vector<GridSpec> axes;
  for (int i = 0; i < n; ++i) axes.push_back(xgrid.refined());
  for (int i = 0; i < n; ++i) axes.push_back(xgrid.dual());
  return axes;
}

GridSymbol translate(const GridSymbol& a, const Vec& shift) {
  if (shift.size() != a.rank()) throw DimensionError("translate: shift length differs from grid rank");
  if (shift.cwiseAbs().maxCoeff() == 0.0) return a;
  GridSymbol out = a;
  auto shape = a.shape();
  fft_inplace(out.values, shape, FftDirection::Forward);

  // Per-axis phase factors exp(i Xi_k s); at the Nyquist bin only the cosine survives.
  std::vector<std::vector<cd>> phase(a.rank());
  for (int k = 0; k < a.rank(); ++k) {
    const int N = shape[k];
    const double L = a.axes[k].extent;
    phase[k].resize(N);
    for (int b = 0; b < N; ++b) {
      double xi = std::numbers::pi * signed_bin(b, N) / L;
      if (b == N / 2)
        phase[k][b] = std::cos(xi * shift[k]);
      else
        phase[k][b] = std::polar(1.0, xi * shift[k]);
    }
  }
  const double norm = 1.0 / static_cast<double>(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto idx = out.unflatten(i);
    cd f = norm;
    for (int k = 0; k < a.rank(); ++k) f *= phase[k][idx[k]];
    out.values[i] *= f;
  }
  fft_inplace(out.values, shape, FftDirection::Backward);
  return out;
}

double spectral_edge_fraction(const std::vector<cd>& spectrum, const std::vector<int>& shape,
                              int bins) {
  double total = 0.0, edge = 0.0;
  std::vector<int> idx(shape.size(), 0);
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    std::size_t r = i;
    bool near = false;
    for (int k = static_cast<int>(shape.size()) - 1; k >= 0; --k) {
      int b = static_cast<int>(r % shape[k]);
      r /= shape[k];
      if (std::abs(signed_bin(b, shape[k])) >= shape[k] / 2 - bins) near = true;
    }
    double e = std::norm(spectrum[i]);
    total += e;
    if (near) edge += e;
  }
  return total > 0.0 ? edge / total : 0.0;
}

GridSymbol coarsen_symbol(const GridSymbol& a) {
  const int n = a.n;
  if (a.rank() != 2 * n) throw DimensionError("coarsen_symbol expects a symbol on E");
  std::vector<GridSpec> axes = a.axes;
  for (int k = 0; k < n; ++k) axes[k] = GridSpec(a.axes[k].extent, a.axes[k].points / 2);
  GridSymbol out(n, axes, a.domain);
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto idx = out.unflatten(i);
    for (int k = 0; k < n; ++k) idx[k] *= 2;
    out.values[i] = a.values[a.flatten(idx)];
  }
  return out;
}

}  // namespace wsym
