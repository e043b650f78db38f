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

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "wsym/phase_space.hpp"

namespace wsym {

// What the axes of a sampled function stand for.
enum class Domain {
  Position,    // R^n, a state u(x)
  PhaseSpace,  // E = R^{2n}, a symbol a(x, xi)
  PhasePair,   // E x E*
};

std::string to_string(Domain d);
Domain domain_from_string(const std::string& s);

// Complex samples on a tensor grid, row-major with the last axis fastest.
struct GridSymbol {
  int n = 1;
  std::vector<GridSpec> axes;
  Domain domain = Domain::PhaseSpace;
  std::vector<cd> values;

  GridSymbol() = default;
  GridSymbol(int n, std::vector<GridSpec> axes, Domain domain);

  using Sampler = std::function<cd(const Vec&)>;
  static GridSymbol sample(int n, std::vector<GridSpec> axes, Domain domain, const Sampler& f);

  int rank() const { return static_cast<int>(axes.size()); }
  std::size_t size() const { return values.size(); }
  std::vector<int> shape() const;
  std::vector<int> unflatten(std::size_t flat) const;
  std::size_t flatten(const std::vector<int>& index) const;
  Vec point(std::size_t flat) const;
  // Product of the axis spacings, the volume element of discrete integrals.
  double cell_volume() const;

  bool same_grid(const GridSymbol& other) const;
  double max_abs() const;
  // Largest modulus on the outermost layer of grid points.
  double boundary_max() const;
  double lp_norm(double p) const;

  GridSymbol& operator+=(const GridSymbol& other);
  GridSymbol operator*(cd factor) const;
  GridSymbol operator+(const GridSymbol& other) const;
};

// Axes of the canonical symbol grid for Weyl quantization over a position grid: for each spatial
// dimension a refined x-axis holding all midpoints, then for each dimension the dual frequency axis.
std::vector<GridSpec> symbol_axes(const GridSpec& xgrid, int n);

// Band-limited (trigonometric) translate: returns b with b(X) = a(X + shift) on the same grid.
// The Nyquist bin is shifted by its cosine part so real data stays real.
GridSymbol translate(const GridSymbol& a, const Vec& shift);

// Fraction of spectral energy within `bins` bins of the Nyquist edge on any axis.
double spectral_edge_fraction(const std::vector<cd>& spectrum, const std::vector<int>& shape,
                              int bins);

// Subsample the refined x-axes of a canonical symbol back to the position grid.
GridSymbol coarsen_symbol(const GridSymbol& a);

}  // namespace wsym
