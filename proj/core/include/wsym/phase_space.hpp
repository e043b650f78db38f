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

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

namespace wsym {

using cd = std::complex<double>;
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using IVec = Eigen::VectorXi;

// Midpoint and covector of a pair of points of E.
struct Chord {
  Vec midpoint;
  Vec covector;

  // (midpoint, covector) as one point of E x E*.
  Vec stacked() const;
};

// Phase space E = T*R^n with coordinates (x, xi) and Hamilton map J = (0, I; -I, 0).
class SymplecticSpace {
 public:
  explicit SymplecticSpace(int n);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  Mat hamilton() const;

  // sigma(u, v) = (Ju).v
  double form(const Vec& u, const Vec& v) const;
  Vec apply_j(const Vec& u) const;
  Vec apply_j_inverse(const Vec& u) const;

  // q(x, y) = ((x + y)/2, J^{-1}(y - x))
  Chord chord(const Vec& x, const Vec& y) const;
  std::pair<Vec, Vec> chord_inverse(const Vec& midpoint, const Vec& covector) const;

 private:
  void check(const Vec& u) const;
  int n_;
};

struct Box {
  Vec lower;
  Vec upper;

  static Box cube(int dim, double radius);
  int dim() const { return static_cast<int>(lower.size()); }
  bool contains(const Vec& p, double tol = 1e-12) const;
};

struct LatticePoint {
  IVec index;
  Vec coords;
};

// Gamma = origin + basis * Z^d, basis columns are the generators.
class Lattice {
 public:
  Lattice(Mat basis, Vec origin);

  static Lattice integer(int dim, double spacing = 1.0);
  static Lattice diagonal(const Vec& spacings);

  int dim() const { return static_cast<int>(basis_.rows()); }
  const Mat& basis() const { return basis_; }
  const Vec& origin() const { return origin_; }
  bool is_diagonal() const;
  double cell_volume() const;

  Vec point(const IVec& index) const;
  // Nearest lattice index in the integer coordinates of the basis.
  IVec nearest_index(const Vec& p) const;
  Lattice scaled(double factor) const;

  // Every lattice point of the box, lexicographic in the integer coordinates.
  std::vector<LatticePoint> points_in(const Box& box) const;

 private:
  Mat basis_;
  Vec origin_;
  Mat inverse_;
};

// Uniform periodic grid on [-L, L): x_j = -L + j h, h = 2L/N, N even.
struct GridSpec {
  double extent = 1.0;
  int points = 2;

  GridSpec() = default;
  GridSpec(double extent, int points);

  double spacing() const { return 2.0 * extent / points; }
  double coord(int j) const { return -extent + j * spacing(); }
  double nyquist() const;
  Vec coords() const;
  // Frequency grid of the discrete transform: N points over [-pi/h, pi/h).
  GridSpec dual() const;
  // Same extent, twice the points: holds the midpoints (x_i + x_j)/2.
  GridSpec refined() const;
  bool matches(const GridSpec& other, double rel_tol = 1e-9) const;

  // The self-dual choice L = pi/h, i.e. L^2 = pi N / 2.
  static GridSpec balanced(int points);
};

}  // namespace wsym
