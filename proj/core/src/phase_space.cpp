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

#include "wsym/phase_space.hpp"

#include <cmath>
#include <numbers>

#include "wsym/error.hpp"

namespace wsym {

Vec Chord::stacked() const {
  Vec out(midpoint.size() + covector.size());
  out << midpoint, covector;
  return out;
}

SymplecticSpace::SymplecticSpace(int n) : n_(n) {
  if (n < 1) throw DimensionError("symplectic space needs n >= 1");
}

Mat SymplecticSpace::hamilton() const {
  Mat j = Mat::Zero(dim(), dim());
  j.topRightCorner(n_, n_).setIdentity();
  j.bottomLeftCorner(n_, n_) = -Mat::Identity(n_, n_);
  return j;
}

void SymplecticSpace::check(const Vec& u) const {
  if (u.size() != dim())
    throw DimensionError("phase point of length " + std::to_string(u.size()) + ", expected " +
                         std::to_string(dim()));
}

// J(x, xi) = (xi, -x); written out so that the result is exact in floating point.
Vec SymplecticSpace::apply_j(const Vec& u) const {
  check(u);
  Vec out(dim());
  out.head(n_) = u.tail(n_);
  out.tail(n_) = -u.head(n_);
  return out;
}

Vec SymplecticSpace::apply_j_inverse(const Vec& u) const { return -apply_j(u); }

double SymplecticSpace::form(const Vec& u, const Vec& v) const {
  check(v);
  return apply_j(u).dot(v);
}

Chord SymplecticSpace::chord(const Vec& x, const Vec& y) const {
  check(x);
  check(y);
  return {0.5 * (x + y), apply_j_inverse(y - x)};
}

std::pair<Vec, Vec> SymplecticSpace::chord_inverse(const Vec& midpoint, const Vec& covector) const {
  check(midpoint);
  Vec half = 0.5 * apply_j(covector);
  return {midpoint - half, midpoint + half};
}

Box Box::cube(int dim, double radius) {
  return {Vec::Constant(dim, -radius), Vec::Constant(dim, radius)};
}

bool Box::contains(const Vec& p, double tol) const {
  for (int i = 0; i < dim(); ++i)
    if (p[i] < lower[i] - tol || p[i] > upper[i] + tol) return false;
  return true;
}

Lattice::Lattice(Mat basis, Vec origin) : basis_(std::move(basis)), origin_(std::move(origin)) {
  if (basis_.rows() != basis_.cols() || origin_.size() != basis_.rows())
    throw DimensionError("lattice basis must be square and match the origin");
  Eigen::FullPivLU<Mat> lu(basis_);
  if (!lu.isInvertible() || std::abs(basis_.determinant()) < 1e-12)
    throw PreconditionError("lattice basis is singular");
  inverse_ = lu.inverse();
}

Lattice Lattice::integer(int dim, double spacing) {
  return Lattice(spacing * Mat::Identity(dim, dim), Vec::Zero(dim));
}

Lattice Lattice::diagonal(const Vec& spacings) {
  return Lattice(spacings.asDiagonal().toDenseMatrix(), Vec::Zero(spacings.size()));
}

bool Lattice::is_diagonal() const {
  Mat off = basis_;
  off.diagonal().setZero();
  return off.cwiseAbs().maxCoeff() == 0.0;
}

double Lattice::cell_volume() const { return std::abs(basis_.determinant()); }

Vec Lattice::point(const IVec& index) const { return origin_ + basis_ * index.cast<double>(); }

IVec Lattice::nearest_index(const Vec& p) const {
  Vec k = inverse_ * (p - origin_);
  IVec out(k.size());
  for (int i = 0; i < k.size(); ++i) out[i] = static_cast<int>(std::lround(k[i]));
  return out;
}

Lattice Lattice::scaled(double factor) const { return Lattice(factor * basis_, factor * origin_); }

std::vector<LatticePoint> Lattice::points_in(const Box& box) const {
  const int d = dim();
  if (box.dim() != d) throw DimensionError("box dimension differs from lattice dimension");
  for (int i = 0; i < d; ++i)
    if (!std::isfinite(box.lower[i]) || !std::isfinite(box.upper[i]) || box.lower[i] > box.upper[i])
      throw PreconditionError("lattice enumeration needs a bounded, nonempty box");

  // Integer preimage of the box: k = B^{-1}(p - o) ranges over center +- sum_j |B^{-1}_ij| halfwidth_j.
  Vec center = 0.5 * (box.lower + box.upper);
  Vec half = 0.5 * (box.upper - box.lower);
  Vec kc = inverse_ * (center - origin_);
  Vec kr = inverse_.cwiseAbs() * half;
  IVec lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    lo[i] = static_cast<int>(std::floor(kc[i] - kr[i] - 1e-9));
    hi[i] = static_cast<int>(std::ceil(kc[i] + kr[i] + 1e-9));
  }

  std::vector<LatticePoint> out;
  IVec k = lo;
  while (true) {
    Vec p = point(k);
    if (box.contains(p)) out.push_back({k, p});
    int i = d - 1;
    while (i >= 0 && k[i] == hi[i]) {
      k[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++k[i];
  }
  return out;
}

GridSpec::GridSpec(double extent_, int points_) : extent(extent_), points(points_) {
  if (!(extent > 0.0) || !std::isfinite(extent)) throw InputError("grid extent must be positive");
  if (points < 2 || points % 2 != 0) throw InputError("grid point count must be even and >= 2");
}

double GridSpec::nyquist() const { return std::numbers::pi / spacing(); }

Vec GridSpec::coords() const {
  Vec out(points);
  for (int j = 0; j < points; ++j) out[j] = coord(j);
  return out;
}

GridSpec GridSpec::dual() const { return GridSpec(nyquist(), points); }

GridSpec GridSpec::refined() const { return GridSpec(extent, 2 * points); }

bool GridSpec::matches(const GridSpec& other, double rel_tol) const {
  return points == other.points && std::abs(extent - other.extent) <= rel_tol * extent;
}

GridSpec GridSpec::balanced(int points) {
  return GridSpec(std::sqrt(std::numbers::pi * points / 2.0), points);
}

}  // namespace wsym
