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

#include "wsym/quantize.hpp"

#include <cmath>
#include <numbers>

#include "wsym/error.hpp"
#include "wsym/fft.hpp"

namespace wsym {

WeylOperator weyl_quantize(const GridSymbol& a, const GridSpec& xgrid) {
  const int n = a.n;
  if (a.rank() != 2 * n) throw DimensionError("weyl_quantize: symbol must have 2n axes");
  auto want = symbol_axes(xgrid, n);
  for (int k = 0; k < 2 * n; ++k)
    if (!a.axes[k].matches(want[k]))
      throw PreconditionError(
          "weyl_quantize: symbol grid does not cover the midpoints and frequencies of the position grid "
          "(axis " + std::to_string(k) + " has N=" + std::to_string(a.axes[k].points) + ", L=" +
          std::to_string(a.axes[k].extent) + "; expected N=" + std::to_string(want[k].points) + ", L=" +
          std::to_string(want[k].extent) + ")");

  const int N = xgrid.points;
  const int N2 = 2 * N;
  std::size_t per = 1, mids = 1;
  for (int d = 0; d < n; ++d) per *= N, mids *= static_cast<std::size_t>(N2);
  std::vector<int> tau_dims(n, N);
  const double scale = 1.0 / static_cast<double>(per);

  // tables[k] = inverse DFT in tau of a(m_k, .) for every midpoint index k of the refined axes.
  std::vector<cd> tables(a.values);
  for (std::size_t kf = 0; kf < mids; ++kf) fft_inplace(tables.data() + kf * per, tau_dims, FftDirection::Backward);

  WeylOperator op;
  op.n = n;
  op.grid = xgrid;
  op.matrix = CMat::Zero(per, per);

  // The discrete kernel is periodic in the chord x - y with period 2L. Each pair is read on the
  // torus: the chord c is taken in [-N/2, N/2) and the midpoint is x_i - c h/2, wrapped. At
  // |c| = N/2 both torus midpoints qualify and the entry averages them, which keeps real
  // symbols Hermitian.
  std::vector<int> i(n, 0), j(n, 0), c(n), k0(n), k1(n);
  for (std::size_t row = 0; row < per; ++row) {
    std::size_t r = row;
    for (int d = n - 1; d >= 0; --d) i[d] = static_cast<int>(r % N), r /= N;
    for (std::size_t col = 0; col < per; ++col) {
      std::size_t q = col;
      for (int d = n - 1; d >= 0; --d) j[d] = static_cast<int>(q % N), q /= N;
      std::size_t cf = 0;
      int parity = 0, ambiguous = 0;
      for (int d = 0; d < n; ++d) {
        int cw = i[d] - j[d];
        cw = ((cw + N / 2) % N + N) % N - N / 2;
        c[d] = cw;
        parity += cw;
        cf = cf * N + static_cast<std::size_t>((cw + N) % N);
        k0[d] = ((2 * i[d] - cw) % N2 + N2) % N2;
        if (cw == -N / 2) {
          k1[d] = ((2 * i[d] + cw) % N2 + N2) % N2;
          ++ambiguous;
        } else {
          k1[d] = k0[d];
        }
      }
      cd sum = 0.0;
      const int combos = 1 << ambiguous;
      for (int mask = 0; mask < combos; ++mask) {
        std::size_t kf = 0;
        int bit = 0;
        for (int d = 0; d < n; ++d) {
          int kd = k0[d];
          if (c[d] == -N / 2) kd = ((mask >> bit++) & 1) ? k1[d] : k0[d];
          kf = kf * N2 + kd;
        }
        sum += tables[kf * per + cf];
      }
      double sign = (parity % 2 == 0) ? 1.0 : -1.0;
      op.matrix(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = scale * sign * sum / double(combos);
    }
  }
  return op;
}

GridSymbol moyal_product(const GridSymbol& a, const GridSymbol& b, const MoyalOptions& opts) {
  if (!a.same_grid(b) || a.n != b.n) throw DimensionError("moyal_product: symbols on different grids");
  const int n = a.n;
  const int rank = a.rank();
  if (rank != 2 * n) throw DimensionError("moyal_product: symbols must live on E");
  const std::size_t M = a.size();
  const double tensor_bytes = 16.0 * static_cast<double>(M) * static_cast<double>(M);
  if (tensor_bytes > opts.memory_budget_bytes)
    throw BudgetError("moyal_product: the E x E tensor needs " + std::to_string(tensor_bytes / 1048576.0) +
                      " MiB, over the budget of " + std::to_string(opts.memory_budget_bytes / 1048576.0) +
                      " MiB");
  auto shape = a.shape();
  std::vector<cd> fa = a.values, fb = b.values;
  fft_inplace(fa, shape, FftDirection::Forward);
  fft_inplace(fb, shape, FftDirection::Forward);
  if (opts.check_aliasing) {
    double ea = spectral_edge_fraction(fa, shape, 2), eb = spectral_edge_fraction(fb, shape, 2);
    if (std::max(ea, eb) > opts.alias_tol)
      throw AliasingError("moyal_product: input spectrum reaches the Nyquist edge (edge energy fraction " +
                          std::to_string(std::max(ea, eb)) + ")");
  }

  // Per-axis signed frequencies Xi = pi k'/L and, per spatial dimension j, the two phase tables
  // of exp((i/2) sigma(Xi, H)) = prod_j exp((i/2)(Xi_{xi_j} H_{x_j} - Xi_{x_j} H_{xi_j})).
  std::vector<std::vector<double>> freq(rank);
  for (int k = 0; k < rank; ++k) {
    freq[k].resize(shape[k]);
    for (int q = 0; q < shape[k]; ++q) freq[k][q] = std::numbers::pi * signed_bin(q, shape[k]) / a.axes[k].extent;
  }
  std::vector<CMat> P(n), Q(n);
  for (int j = 0; j < n; ++j) {
    const int X = j, Xi = n + j;
    P[j].resize(shape[Xi], shape[X]);
    for (int p = 0; p < shape[Xi]; ++p)
      for (int q = 0; q < shape[X]; ++q) P[j](p, q) = std::polar(1.0, 0.5 * freq[Xi][p] * freq[X][q]);
    Q[j].resize(shape[X], shape[Xi]);
    for (int p = 0; p < shape[X]; ++p)
      for (int q = 0; q < shape[Xi]; ++q) Q[j](p, q) = std::polar(1.0, -0.5 * freq[X][p] * freq[Xi][q]);
  }

  std::vector<std::vector<int>> idx(M, std::vector<int>(rank));
  for (std::size_t f = 0; f < M; ++f) idx[f] = a.unflatten(f);
  std::vector<std::size_t> stride(rank, 1);
  for (int k = rank - 2; k >= 0; --k) stride[k] = stride[k + 1] * shape[k + 1];

  std::vector<cd> fold(M, cd{0.0, 0.0});
  std::vector<cd> row(M);
  for (std::size_t kf = 0; kf < M; ++kf) {
    if (fa[kf] == cd{0.0, 0.0}) continue;
    const auto& ki = idx[kf];
    for (std::size_t lf = 0; lf < M; ++lf) {
      const auto& li = idx[lf];
      cd ph = fa[kf] * fb[lf];
      std::size_t s = 0;
      for (int k = 0; k < rank; ++k) {
        int v = ki[k] + li[k];
        if (v >= shape[k]) v -= shape[k];
        s += v * stride[k];
      }
      for (int j = 0; j < n; ++j) ph *= P[j](ki[n + j], li[j]) * Q[j](ki[j], li[n + j]);
      fold[s] += ph;
    }
  }
  if (opts.check_aliasing) {
    double e = spectral_edge_fraction(fold, shape, 2);
    if (e > opts.alias_tol)
      throw AliasingError("moyal_product: product spectrum reaches the Nyquist edge (edge energy fraction " +
                          std::to_string(e) + ")");
  }
  fft_inplace(fold, shape, FftDirection::Backward);
  GridSymbol out(n, a.axes, a.domain);
  const double norm = 1.0 / (static_cast<double>(M) * static_cast<double>(M));
  for (std::size_t f = 0; f < M; ++f) out.values[f] = fold[f] * norm;
  return out;
}

Vec LinearForm::hamilton_vector() const {
  SymplecticSpace s(static_cast<int>(covector.size()) / 2);
  return s.apply_j(covector);
}

GridSymbol exp_linear(const LinearForm& l, const GridSymbol& like) {
  if (l.covector.size() != like.rank()) throw DimensionError("linear form does not match the grid");
  for (int k = 0; k < like.rank(); ++k) {
    double bins = l.covector[k] * like.axes[k].extent / std::numbers::pi;
    if (std::abs(bins - std::round(bins)) > 1e-9)
      throw PreconditionError("linear form covector is not a frequency of the grid on axis " + std::to_string(k));
  }
  return GridSymbol::sample(like.n, like.axes, like.domain, [&](const Vec& x) { return std::polar(1.0, l(x)); });
}

namespace {

void check_margin(const GridSymbol& a, const Vec& shift) {
  for (int k = 0; k < a.rank(); ++k)
    if (std::abs(shift[k]) > 0.5 * a.axes[k].extent)
      throw PreconditionError("shift " + std::to_string(shift[k]) + " on axis " + std::to_string(k) +
                              " exceeds the grid margin");
}

GridSymbol times_exp(const LinearForm& l, GridSymbol a) {
  for (std::size_t f = 0; f < a.size(); ++f) a.values[f] *= std::polar(1.0, l(a.point(f)));
  return a;
}

GridSymbol shifted(const GridSymbol& a, const Vec& s) {
  if (s.size() != a.rank()) throw DimensionError("linear form does not match the grid");
  check_margin(a, s);
  return translate(a, s);
}

}  // namespace

GridSymbol exp_symbol_left(const LinearForm& l, const GridSymbol& a) {
  return times_exp(l, shifted(a, 0.5 * l.hamilton_vector()));
}

GridSymbol exp_symbol_right(const GridSymbol& a, const LinearForm& l) {
  return times_exp(l, shifted(a, -0.5 * l.hamilton_vector()));
}

GridSymbol exp_symbol_sandwich(const LinearForm& l, const GridSymbol& a) {
  if (l.covector.size() != a.rank()) throw DimensionError("linear form does not match the grid");
  return times_exp(l, a);
}

GridSymbol exp_symbol_conjugate(const LinearForm& l, const GridSymbol& a) {
  return shifted(a, l.hamilton_vector());
}

}  // namespace wsym
