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

#include "wsym/bargmann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "wsym/error.hpp"

namespace wsym {

namespace {

constexpr cd I{0.0, 1.0};

// Weight W of Phi(x) = sup_y -Im phi(x, y), recovered by polarization of the closed-form supremum.
Mat weight_from_phase(const BargmannSetup& s) {
  const int d = 2 * s.n;
  auto eval = [&](const Vec& z) {
    CVec x(s.n);
    for (int k = 0; k < s.n; ++k) x[k] = cd(z[k], z[s.n + k]);
    return s.weight_by_sup(x);
  };
  Mat w(d, d);
  for (int i = 0; i < d; ++i) {
    Vec ei = Vec::Unit(d, i);
    w(i, i) = 2.0 * eval(ei);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec e = Vec::Unit(d, i) + Vec::Unit(d, j);
      w(i, j) = w(j, i) = eval(e) - 0.5 * w(i, i) - 0.5 * w(j, j);
    }
  return w;
}

bool is_diag(const CMat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j && std::abs(m(i, j)) > 0.0) return false;
  return true;
}

void require_separable(const BargmannSetup& s) {
  bool ok = is_diag(s.a) && is_diag(s.b) && is_diag(s.c);
  for (int i = 0; i < 2 * s.n && ok; ++i)
    for (int j = 0; j < 2 * s.n; ++j)
      if ((i % s.n) != (j % s.n) && s.weight(i, j) != 0.0) ok = false;
  if (!ok) throw PreconditionError("grid transforms need a phase that separates over the dimensions");
}

// One-dimensional pieces of a separable setup.
struct Dim1 {
  cd a, b, c;
  double wss, wst, wtt;

  cd phase(cd x, double t) const { return 0.5 * a * x * x + b * x * t + 0.5 * c * t * t; }
  double weight(cd x) const {
    return 0.5 * (wss * x.real() * x.real() + 2.0 * wst * x.real() * x.imag() +
                  wtt * x.imag() * x.imag());
  }
};

Dim1 dim1(const BargmannSetup& s, int k) {
  return {s.a(k, k), s.b(k, k), s.c(k, k), s.weight(k, k), s.weight(k, s.n + k),
          s.weight(s.n + k, s.n + k)};
}

double per_dim_norm(const BargmannSetup& s) { return std::pow(s.norm, 1.0 / s.n); }

// E(z, t) = exp(i phi(z, t) - Phi(z)) for z on the complex grid and t on the position grid.
CMat exponential_table(const Dim1& d, const ComplexGrid& g) {
  const int m = g.per_dim();
  const Vec t = g.position.coords();
  CMat e(m, g.position.points);
  for (int k = 0; k < m; ++k) {
    const cd z = g.point(k);
    const double w = d.weight(z);
    for (int j = 0; j < t.size(); ++j) e(k, j) = std::exp(I * d.phase(z, t[j]) - w);
  }
  return e;
}

// Applies a rectangular matrix along one axis of a row-major tensor and updates the shape.
std::vector<cd> apply_rect(const std::vector<cd>& data, std::vector<int>& shape, int axis,
                           const CMat& op) {
  std::size_t outer = 1, inner = 1;
  for (int k = 0; k < axis; ++k) outer *= shape[k];
  for (std::size_t k = axis + 1; k < shape.size(); ++k) inner *= shape[k];
  const int nin = shape[axis];
  const int nout = static_cast<int>(op.rows());
  if (op.cols() != nin) throw DimensionError("axis operator does not match the tensor");
  std::vector<cd> out(outer * nout * inner);
  for (std::size_t o = 0; o < outer; ++o) {
    Eigen::Map<const CMat> src(data.data() + o * nin * inner, inner, nin);
    Eigen::Map<CMat> dst(out.data() + o * nout * inner, inner, nout);
    dst.noalias() = src * op.transpose();
  }
  shape[axis] = nout;
  return out;
}

void check_grid_function(const GridSymbol& u, int n) {
  if (u.rank() != n) throw DimensionError("state rank does not match the transform dimension");
  for (const auto& ax : u.axes)
    if (!ax.matches(u.axes[0])) throw PreconditionError("transform needs identical grid axes");
}

void check_decay(const GridSymbol& u, double tol) {
  const double peak = u.max_abs();
  if (peak > 0.0 && u.boundary_max() > tol * peak) {
    std::ostringstream os;
    os << "state does not decay at the grid boundary: edge/peak = " << u.boundary_max() / peak
       << " > " << tol;
    throw PreconditionError(os.str());
  }
}

}  // namespace

BargmannSetup BargmannSetup::standard(int n) {
  if (n < 1) throw DimensionError("dimension must be positive");
  BargmannSetup s;
  s.n = n;
  s.a = I * CMat::Identity(n, n);
  s.b = -I * CMat::Identity(n, n);
  s.c = I * CMat::Identity(n, n);
  s.weight = Mat::Zero(2 * n, 2 * n);
  s.weight.bottomRightCorner(n, n) = Mat::Identity(n, n);
  s.norm = std::pow(1.0 / (std::sqrt(2.0) * std::pow(std::numbers::pi, 0.75)), n);
  return s;
}

BargmannSetup BargmannSetup::from_phase(CMat a, CMat b, CMat c) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n || b.rows() != n || b.cols() != n || c.rows() != n || c.cols() != n)
    throw DimensionError("phase blocks must be square of one size");
  BargmannSetup s = standard(n);
  s.a = std::move(a);
  s.b = std::move(b);
  s.c = std::move(c);
  if (std::abs(s.b.determinant()) < 1e-12) throw PreconditionError("d2 phi / dx dy is singular");
  Eigen::SelfAdjointEigenSolver<Mat> es(s.c.imag());
  if (es.eigenvalues().minCoeff() <= 0.0) throw PreconditionError("Im d2 phi / dy2 is not positive definite");
  s.weight = weight_from_phase(s);
  return s;
}

bool BargmannSetup::is_standard() const {
  const auto st = standard(n);
  return (a - st.a).norm() == 0.0 && (b - st.b).norm() == 0.0 && (c - st.c).norm() == 0.0;
}

cd BargmannSetup::phase(const CVec& x, const Vec& y) const {
  const CVec yc = y.cast<cd>();
  // Bilinear forms: no conjugation of x.
  return (0.5 * x.transpose() * a * x + x.transpose() * b * yc + 0.5 * yc.transpose() * c * yc)(0, 0);
}

double BargmannSetup::weight_at(const CVec& x) const {
  Vec z(2 * n);
  z << x.real(), x.imag();
  return 0.5 * z.dot(weight * z);
}

double BargmannSetup::weight_by_sup(const CVec& x) const {
  // -Im phi is a concave quadratic in y with Hessian -Im C; its maximizer solves a linear system.
  const Mat imc = c.imag();
  const Vec v = (b.transpose() * x).imag();
  const Vec ystar = -imc.ldlt().solve(v);
  const cd quad = (x.transpose() * a * x)(0, 0);
  const cd mixed = (x.transpose() * b * ystar.cast<cd>())(0, 0);
  const double yy = ystar.dot(imc * ystar);
  return -0.5 * quad.imag() - mixed.imag() - 0.5 * yy;
}

CVec BargmannSetup::lambda_fibre(const CVec& x) const {
  Vec z(2 * n);
  z << x.real(), x.imag();
  const Vec grad = weight * z;  // (d_s Phi, d_t Phi)
  // d_x = (d_s - i d_t)/2, so (2/i) d_x Phi = -i d_s Phi - d_t Phi.
  return -I * grad.head(n).cast<cd>() - grad.tail(n).cast<cd>();
}

std::pair<CVec, CVec> BargmannSetup::kappa(const Vec& y, const Vec& eta) const {
  // eta = -d_y phi = -(B^T x + C y), xi = d_x phi = A x + B y.
  const CVec rhs = -(eta.cast<cd>() + c * y.cast<cd>());
  const CVec x = b.transpose().partialPivLu().solve(rhs);
  const CVec xi = a * x + b * y.cast<cd>();
  return {x, xi};
}

CVec BargmannSetup::iota(const Vec& rho) const {
  if (rho.size() != 2 * n) throw DimensionError("point of E has the wrong dimension");
  return kappa(rho.head(n), rho.tail(n)).first;
}

Mat BargmannSetup::iota_matrix() const {
  // iota is real-linear on R^{2n}; its matrix maps (y, eta) to (Re x, Im x).
  const int d = 2 * n;
  Mat m(d, d);
  for (int j = 0; j < d; ++j) {
    const CVec v = iota(Vec::Unit(d, j));
    m.col(j) << v.real(), v.imag();
  }
  return m;
}

Vec BargmannSetup::iota_inverse(const CVec& x) const {
  Vec z(2 * n);
  z << x.real(), x.imag();
  return iota_matrix().partialPivLu().solve(z);
}

CVec BargmannSetup::admissible_covector(const CVec& x0) const {
  // With g(x) = (2/i) dPhi/dx = G_s s + G_t t, Im l vanishes for all (s, t) iff
  // Im x0* = -Im(G_s^T x0) and Re x0* = -Im(G_t^T x0).
  const Mat wss = weight.topLeftCorner(n, n), wst = weight.topRightCorner(n, n);
  const Mat wts = weight.bottomLeftCorner(n, n), wtt = weight.bottomRightCorner(n, n);
  const CMat gs = -I * wss.cast<cd>() - wts.cast<cd>();
  const CMat gt = -I * wst.cast<cd>() - wtt.cast<cd>();
  const Vec im = -(gs.transpose() * x0).imag();
  const Vec re = -(gt.transpose() * x0).imag();
  CVec out(n);
  for (int k = 0; k < n; ++k) out[k] = cd(re[k], im[k]);
  return out;
}

SetupCheck setup_self_test(const BargmannSetup& s, int samples, std::uint64_t seed) {
  SetupCheck r;
  r.det_xy = std::abs(s.b.determinant());
  Eigen::SelfAdjointEigenSolver<Mat> es(s.c.imag());
  r.min_eig_im_yy = es.eigenvalues().minCoeff();
  r.norm_closed_form = std::pow(1.0 / (std::sqrt(2.0) * std::pow(std::numbers::pi, 0.75)), s.n);
  if (r.det_xy < 1e-12 || r.min_eig_im_yy <= 0.0) {
    r.passed = false;
    return r;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 2.0);
  for (int i = 0; i < samples; ++i) {
    CVec x(s.n);
    for (int k = 0; k < s.n; ++k) x[k] = cd(nd(rng), nd(rng));
    const double scale = 1.0 + x.squaredNorm();
    r.weight_residual = std::max(r.weight_residual,
                                 std::abs(s.weight_at(x) - s.weight_by_sup(x)) / scale);
    Vec y(s.n), eta(s.n);
    for (int k = 0; k < s.n; ++k) {
      y[k] = nd(rng);
      eta[k] = nd(rng);
    }
    const auto [xx, xi] = s.kappa(y, eta);
    r.lagrangian_residual = std::max(r.lagrangian_residual,
                                     (xi - s.lambda_fibre(xx)).norm() / (1.0 + xx.norm()));
  }
  r.passed = r.weight_residual < 1e-10 && r.lagrangian_residual < 1e-10;
  return r;
}

BargmannSetup calibrate(BargmannSetup s, const GridSpec& position) {
  s.norm = 1.0;
  std::vector<GridSpec> axes(s.n, position);
  const double h = position.spacing();
  GridSymbol u0 = GridSymbol::sample(s.n, axes, Domain::Position, [](const Vec& t) {
    return cd(std::exp(-0.5 * t.squaredNorm()), 0.0);
  });
  const double un = std::sqrt(std::pow(h, s.n)) * Eigen::Map<const CVec>(u0.values.data(), u0.size()).norm();
  const double tn = bargmann_transform(u0, s, 1).l2_norm();
  s.norm = un / tn;
  return s;
}

cd ComplexGrid::point(int k) const {
  const GridSpec re = re_axis(), im = im_axis();
  return cd(re.coord(k / im.points), im.coord(k % im.points));
}

double WeightedGridFunction::l2_norm() const {
  double s = 0.0;
  for (const auto& v : values) s += std::norm(v);
  return std::sqrt(s * std::pow(grid.cell_area(), n));
}

CVec WeightedGridFunction::point(std::size_t flat) const {
  const std::size_t m = grid.per_dim();
  CVec x(n);
  for (int k = n - 1; k >= 0; --k) {
    x[k] = grid.point(static_cast<int>(flat % m));
    flat /= m;
  }
  return x;
}

WeightedGridFunction bargmann_transform(const GridSymbol& u, const BargmannSetup& s, int stride,
                                        const TransformOptions& opts) {
  require_separable(s);
  check_grid_function(u, s.n);
  if (stride < 1 || u.axes[0].points % stride != 0) throw PreconditionError("stride must divide the grid");
  check_decay(u, opts.boundary_tol);
  WeightedGridFunction w;
  w.n = s.n;
  w.grid = ComplexGrid{u.axes[0], stride};
  const double c1 = per_dim_norm(s) * u.axes[0].spacing();
  std::vector<int> shape = u.shape();
  std::vector<cd> data = u.values;
  for (int k = 0; k < s.n; ++k) data = apply_rect(data, shape, k, c1 * exponential_table(dim1(s, k), w.grid));
  w.values = std::move(data);
  return w;
}

cd bargmann_transform_at(const GridSymbol& u, const BargmannSetup& s, const CVec& x) {
  check_grid_function(u, s.n);
  const double vol = u.cell_volume();
  const double phi = s.weight_at(x);
  cd acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u.values[i] == cd(0.0)) continue;
    acc += std::exp(I * s.phase(x, u.point(i)) - phi) * u.values[i];
  }
  return s.norm * vol * acc;
}

GridSymbol bargmann_adjoint(const WeightedGridFunction& v, const BargmannSetup& s) {
  require_separable(s);
  if (v.n != s.n) throw DimensionError("weighted function and setup differ in dimension");
  const double c1 = per_dim_norm(s) * v.grid.cell_area();
  std::vector<int> shape(s.n, v.grid.per_dim());
  std::vector<cd> data = v.values;
  for (int k = 0; k < s.n; ++k)
    data = apply_rect(data, shape, k, c1 * exponential_table(dim1(s, k), v.grid).adjoint());
  GridSymbol u(s.n, std::vector<GridSpec>(s.n, v.grid.position), Domain::Position);
  u.values = std::move(data);
  return u;
}

WeightedGridFunction conjugate_transform(const GridSymbol& u, const BargmannSetup& s, int stride) {
  require_separable(s);
  check_grid_function(u, s.n);
  WeightedGridFunction w;
  w.n = s.n;
  w.grid = ComplexGrid{u.axes[0], stride};
  const double c1 = per_dim_norm(s) * u.axes[0].spacing();
  const Vec t = w.grid.position.coords();
  std::vector<int> shape = u.shape();
  std::vector<cd> data = u.values;
  for (int k = 0; k < s.n; ++k) {
    const Dim1 d = dim1(s, k);
    CMat e(w.grid.per_dim(), t.size());
    for (int r = 0; r < e.rows(); ++r) {
      const cd y = w.grid.point(r);
      const double wy = d.weight(std::conj(y));
      for (int j = 0; j < t.size(); ++j)
        e(r, j) = c1 * std::exp(-I * std::conj(d.phase(std::conj(y), t[j])) - wy);
    }
    data = apply_rect(data, shape, k, e);
  }
  w.values = std::move(data);
  return w;
}

WeightedGridFunction magnetic_translate(const WeightedGridFunction& v, const CVec& x0, const CVec& x0s,
                                        const BargmannSetup& s, MagneticReport* report) {
  if (x0.size() != s.n || x0s.size() != s.n || v.n != s.n)
    throw DimensionError("translation vector has the wrong dimension");
  const GridSpec re = v.grid.re_axis(), im = v.grid.im_axis();
  std::vector<int> shift_re(s.n), shift_im(s.n);
  for (int k = 0; k < s.n; ++k) {
    const double fr = x0[k].real() / re.spacing(), fi = x0[k].imag() / im.spacing();
    if (std::abs(fr - std::round(fr)) > 1e-9 || std::abs(fi - std::round(fi)) > 1e-9)
      throw PreconditionError("magnetic translation must move by whole grid cells");
    shift_re[k] = static_cast<int>(std::lround(fr));
    shift_im[k] = static_cast<int>(std::lround(fi));
  }
  MagneticReport rep;
  rep.norm_before = v.l2_norm();
  WeightedGridFunction out = v;
  const std::size_t m = v.grid.per_dim();
  for (std::size_t flat = 0; flat < v.values.size(); ++flat) {
    const CVec x = v.point(flat);
    const CVec xs = x + x0;
    const cd ell = (x0s.transpose() * x + x0.transpose() * s.lambda_fibre(x))(0, 0);
    rep.reality_residual = std::max(rep.reality_residual, std::abs(ell.imag()));
    const cd lin = (x0s.array() * (x + 0.5 * x0).array()).sum();
    const double expo = -s.weight_at(x) + s.weight_at(xs) + (I * lin).real();
    rep.identity_residual = std::max(rep.identity_residual, std::abs(expo));

    // Source node x + x0; zero outside the grid.
    std::size_t src = 0, rest = flat;
    std::vector<std::size_t> per(s.n);
    for (int k = s.n - 1; k >= 0; --k) {
      per[k] = rest % m;
      rest /= m;
    }
    bool inside = true;
    for (int k = 0; k < s.n && inside; ++k) {
      const int a = static_cast<int>(per[k]) / im.points + shift_re[k];
      const int b = static_cast<int>(per[k]) % im.points + shift_im[k];
      if (a < 0 || a >= re.points || b < 0 || b >= im.points) inside = false;
      src = src * m + static_cast<std::size_t>(a * im.points + b);
    }
    out.values[flat] = inside ? std::exp(cd(expo, (I * lin).imag())) * v.values[src] : cd(0.0);
  }
  rep.norm_after = out.l2_norm();
  if (report) *report = rep;
  return out;
}

EffectiveKernel::EffectiveKernel(BargmannSetup setup, GridSpec grid, CMat core)
    : setup_(std::move(setup)), grid_(grid), core_(std::move(core)) {}

EffectiveKernel EffectiveKernel::from_operator(const WeylOperator& op, const BargmannSetup& s) {
  if (op.n != s.n) throw DimensionError("operator and setup differ in dimension");
  // The operator matrix already carries h^n; one more h^n comes from the second integral.
  const double h = std::pow(op.grid.spacing(), s.n);
  return EffectiveKernel(s, op.grid, h * op.matrix);
}

CVec EffectiveKernel::profile(const CVec& x) const {
  const Vec t = grid_.coords();
  const int np = grid_.points;
  CVec r = CVec::Ones(1);
  for (int k = 0; k < setup_.n; ++k) {
    const Dim1 d = dim1(setup_, k);
    CVec rk(np);
    const double w = d.weight(x[k]);
    for (int j = 0; j < np; ++j) rk[j] = per_dim_norm(setup_) * std::exp(I * d.phase(x[k], t[j]) - w);
    CVec next(r.size() * np);
    for (int i = 0; i < r.size(); ++i) next.segment(i * np, np) = r[i] * rk;
    r = std::move(next);
  }
  return r;
}

cd EffectiveKernel::operator()(const CVec& x, const CVec& y) const {
  require_separable(setup_);
  return (profile(x).transpose() * core_ * profile(y).conjugate())(0, 0);
}

std::vector<cd> EffectiveKernel::row(const CVec& x, const ComplexGrid& zgrid) const {
  if (!zgrid.position.matches(grid_)) throw PreconditionError("quadrature grid differs from the kernel grid");
  const CVec left = core_.transpose() * profile(x);
  std::vector<cd> data(left.data(), left.data() + left.size());
  std::vector<int> shape(setup_.n, grid_.points);
  for (int k = 0; k < setup_.n; ++k)
    data = apply_rect(data, shape, k,
                      (per_dim_norm(setup_) * exponential_table(dim1(setup_, k), zgrid)).conjugate());
  return data;
}

std::vector<cd> EffectiveKernel::column(const CVec& y, const ComplexGrid& zgrid) const {
  if (!zgrid.position.matches(grid_)) throw PreconditionError("quadrature grid differs from the kernel grid");
  const CVec right = core_ * profile(y).conjugate();
  std::vector<cd> data(right.data(), right.data() + right.size());
  std::vector<int> shape(setup_.n, grid_.points);
  for (int k = 0; k < setup_.n; ++k)
    data = apply_rect(data, shape, k, per_dim_norm(setup_) * exponential_table(dim1(setup_, k), zgrid));
  return data;
}

cd EffectiveKernel::at_real(const Vec& rx, const Vec& ry) const {
  return (*this)(setup_.iota(rx), setup_.iota(ry));
}

EffectiveKernel effective_kernel(const GridSymbol& a, const GridSpec& xgrid, const BargmannSetup& s) {
  return EffectiveKernel::from_operator(weyl_quantize(a, xgrid), s);
}

EffectiveKernel kernel_compose(const EffectiveKernel& k1, const EffectiveKernel& k2, int stride) {
  if (!k1.grid().matches(k2.grid()) || k1.n() != k2.n())
    throw PreconditionError("kernels live on different grids");
  require_separable(k1.setup());
  // sum_z conj(r(z)) r(z)^T L(dz) factors over the dimensions; the quadrature runs over z only once.
  const ComplexGrid zg{k1.grid(), stride};
  CMat p = CMat::Ones(1, 1);
  for (int k = 0; k < k1.n(); ++k) {
    const CMat e = per_dim_norm(k1.setup()) * exponential_table(dim1(k1.setup(), k), zg);
    const CMat pk = zg.cell_area() * (e.adjoint() * e);
    CMat next(p.rows() * pk.rows(), p.cols() * pk.cols());
    for (int i = 0; i < p.rows(); ++i)
      for (int j = 0; j < p.cols(); ++j) next.block(i * pk.rows(), j * pk.cols(), pk.rows(), pk.cols()) = p(i, j) * pk;
    p = std::move(next);
  }
  return EffectiveKernel(k1.setup(), k1.grid(), k1.core() * p * k2.core());
}

MembershipReport membership_via_bargmann(const GridSymbol& u, const OrderFunction& m,
                                         const BargmannSetup& s,
                                         const BargmannMembershipOptions& opts) {
  if (m.dim() != 2 * s.n) throw DimensionError("order function must live on F x F*");
  TransformOptions topts;
  topts.boundary_tol = opts.boundary_tol;
  const WeightedGridFunction w = bargmann_transform(u, s, opts.stride, topts);

  MembershipReport rep;
  rep.mode = "bargmann";
  double limit = w.grid.im_axis().extent;
  for (int k = 0; k < s.n; ++k) limit = std::min(limit, u.axes[k].dual().extent);
  rep.bands = VerdictBands::from_limit(limit);

  std::vector<double> freq;
  freq.reserve(w.values.size());
  rep.ratios.reserve(w.values.size());
  rep.points.reserve(w.values.size());
  std::vector<GridSpec> axes;
  for (int k = 0; k < s.n; ++k) {
    axes.push_back(w.grid.re_axis());
    axes.push_back(w.grid.im_axis());
  }
  GridSymbol ratio(s.n, axes, Domain::PhaseSpace);
  const Mat inv = s.iota_matrix().inverse();
  Vec z(2 * s.n);
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    const CVec x = w.point(i);
    z << x.real(), x.imag();
    const Vec rho = inv * z;
    const double r = std::abs(w.values[i]) / m(rho);
    rep.points.push_back(rho);
    rep.ratios.push_back(r);
    ratio.values[i] = r;
    freq.push_back(rho.tail(s.n).cwiseAbs().maxCoeff());
  }
  rep.evaluated = rep.ratios.size();
  rep.classify(freq);
  if (opts.amalgam) {
    rep.aggregation = "[" + opts.amalgam->b.describe() + "]";
    rep.norm = amalgam_norm(ratio, *opts.amalgam);
  } else {
    rep.norm = *std::max_element(rep.ratios.begin(), rep.ratios.end());
  }
  return rep;
}

GridSymbol hermite_function(int k, const GridSpec& grid) {
  if (k < 0) throw InputError("Hermite index must be non-negative");
  return GridSymbol::sample(1, {grid}, Domain::Position, [k](const Vec& t) {
    const double x = t[0];
    double h0 = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    if (k == 0) return cd(h0, 0.0);
    double h1 = std::sqrt(2.0) * x * h0;
    for (int j = 1; j < k; ++j) {
      const double h2 = std::sqrt(2.0 / (j + 1)) * x * h1 - std::sqrt(static_cast<double>(j) / (j + 1)) * h0;
      h0 = h1;
      h1 = h2;
    }
    return cd(h1, 0.0);
  });
}

GridSymbol coherent_state(double y0, double eta0, const GridSpec& grid) {
  return GridSymbol::sample(1, {grid}, Domain::Position, [=](const Vec& t) {
    const double d = t[0] - y0;
    return std::pow(std::numbers::pi, -0.25) * std::exp(cd(-0.5 * d * d, eta0 * t[0]));
  });
}

}  // namespace wsym
