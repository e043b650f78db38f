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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsym/bspaces.hpp"
#include "wsym/grid.hpp"
#include "wsym/order_function.hpp"
#include "wsym/quantize.hpp"
#include "wsym/symbol_class.hpp"

namespace wsym {

// Generalized Bargmann transform Tu(x) = c int exp(i phi(x, y)) u(y) dy with the quadratic phase
// phi(x, y) = x.A x / 2 + x.B y + y.C y / 2, x in C^n, y in R^n. The weight Phi is stored as a real
// quadratic form on (Re x, Im x): Phi(x) = z.W z / 2 with z = (Re x, Im x).
struct BargmannSetup {
  int n = 1;
  CMat a, b, c;  // phi''_xx, phi''_xy, phi''_yy
  double norm = 1.0;
  Mat weight;    // 2n x 2n

  // phi = i (x - y)^2 / 2 in every dimension: Phi(x) = |Im x|^2 / 2, kappa_T(y, eta) = (y - i eta, eta).
  static BargmannSetup standard(int n);
  // Any admissible phase; the weight is derived from the supremum and the norm set to the
  // closed form of the standard case (use calibrate() to fix it numerically).
  static BargmannSetup from_phase(CMat a, CMat b, CMat c);
  bool is_standard() const;

  cd phase(const CVec& x, const Vec& y) const;
  double weight_at(const CVec& x) const;
  // sup over real y of -Im phi(x, y), from the closed-form maximizer.
  double weight_by_sup(const CVec& x) const;
  // (2/i) dPhi/dx, the fibre of Lambda_Phi over x.
  CVec lambda_fibre(const CVec& x) const;
  // kappa_T(y, eta) = (x, xi) with eta = -d_y phi and xi = d_x phi.
  std::pair<CVec, CVec> kappa(const Vec& y, const Vec& eta) const;
  // iota_T = pi o kappa_T : E -> C^n and its inverse. rho = (y, eta).
  CVec iota(const Vec& rho) const;
  Vec iota_inverse(const CVec& x) const;
  Mat iota_matrix() const;
  // Covector x0* for which l(x, xi) = x0*.x + x0.xi is real on Lambda_Phi.
  CVec admissible_covector(const CVec& x0) const;
};

struct SetupCheck {
  bool passed = true;
  double det_xy = 0.0;             // |det phi''_xy|
  double min_eig_im_yy = 0.0;      // smallest eigenvalue of Im phi''_yy
  double weight_residual = 0.0;    // max |Phi(x) - sup_y(-Im phi)|
  double lagrangian_residual = 0.0;  // max |xi - (2/i) dPhi/dx| over kappa_T images
  double norm_closed_form = 0.0;   // (sqrt2 pi^{3/4})^{-n} for the standard phase
};

SetupCheck setup_self_test(const BargmannSetup& s, int samples = 50, std::uint64_t seed = 5);

// Fixes the normalization so that |Tu0| = |u0| for the Gaussian ground state on the given grid.
BargmannSetup calibrate(BargmannSetup s, const GridSpec& position);

// Complex grid over C^n, identical in every dimension: Re x on the position grid, Im x on its
// dual grid, both subsampled by `stride`. Values are row-major over (Re x_1, Im x_1, Re x_2, ...).
struct ComplexGrid {
  GridSpec position;
  int stride = 1;

  GridSpec re_axis() const { return GridSpec(position.extent, position.points / stride); }
  GridSpec im_axis() const { return GridSpec(position.dual().extent, position.points / stride); }
  int per_dim() const { return re_axis().points * im_axis().points; }
  double cell_area() const { return re_axis().spacing() * im_axis().spacing(); }
  cd point(int k) const;  // k-th point of one dimension
};

// Samples of e^{-Phi} v on a complex grid.
struct WeightedGridFunction {
  int n = 1;
  ComplexGrid grid;
  std::vector<cd> values;

  double l2_norm() const;
  CVec point(std::size_t flat) const;
};

struct TransformOptions {
  double boundary_tol = 1e-12;
};

WeightedGridFunction bargmann_transform(const GridSymbol& u, const BargmannSetup& s, int stride = 1,
                                        const TransformOptions& opts = {});
// e^{-Phi(x)} Tu(x) at a single complex point.
cd bargmann_transform_at(const GridSymbol& u, const BargmannSetup& s, const CVec& x);
GridSymbol bargmann_adjoint(const WeightedGridFunction& v, const BargmannSetup& s);
// T~u(y) = c int exp(-i conj(phi(conj y, t))) u(t) dt, stored with the weight e^{-Phi*(y)},
// Phi*(y) = Phi(conj y).
WeightedGridFunction conjugate_transform(const GridSymbol& u, const BargmannSetup& s, int stride = 1);

struct MagneticReport {
  double identity_residual = 0.0;  // max over nodes of |-Phi(x) + Phi(x + x0) + Re(i x0*.(x + x0/2))|
  double reality_residual = 0.0;   // max |Im l| on Lambda_Phi at the nodes
  double norm_before = 0.0;
  double norm_after = 0.0;
};

// (e^{il})^w on weighted functions, l(x, xi) = x0*.x + x0.xi. Shifts must be grid multiples.
WeightedGridFunction magnetic_translate(const WeightedGridFunction& v, const CVec& x0, const CVec& x0s,
                                        const BargmannSetup& s, MagneticReport* report = nullptr);

// K^eff(x, y) = e^{-Phi(x)} K(x, conj y) e^{-Phi(y)}, where K is the kernel of T a^w T* with
// respect to e^{-2 Phi(y)} L(dy). Every kernel here has the form r(x)^T core conj(r(y)) with
// r(x)(t) = c exp(i phi(x, t) - Phi(x)) on the position grid, so values are produced on demand.
class EffectiveKernel {
 public:
  EffectiveKernel() = default;
  EffectiveKernel(BargmannSetup setup, GridSpec grid, CMat core);
  static EffectiveKernel from_operator(const WeylOperator& op, const BargmannSetup& s);

  cd operator()(const CVec& x, const CVec& y) const;
  // Values K(x, z) and K(z, y) for every z of a complex grid, in that grid's flat order.
  std::vector<cd> row(const CVec& x, const ComplexGrid& zgrid) const;
  std::vector<cd> column(const CVec& y, const ComplexGrid& zgrid) const;
  // Evaluation at two points of E, carried to C^n by iota_T.
  cd at_real(const Vec& rx, const Vec& ry) const;

  const BargmannSetup& setup() const { return setup_; }
  const GridSpec& grid() const { return grid_; }
  const CMat& core() const { return core_; }
  int n() const { return setup_.n; }

 private:
  CVec profile(const CVec& x) const;  // r(x) over the position grid
  BargmannSetup setup_;
  GridSpec grid_;
  CMat core_;
};

EffectiveKernel effective_kernel(const GridSymbol& a, const GridSpec& xgrid, const BargmannSetup& s);

// int K1(x, z) K2(z, y) L(dz) by quadrature over the complex grid of the shared position grid.
EffectiveKernel kernel_compose(const EffectiveKernel& k1, const EffectiveKernel& k2, int stride = 1);

struct BargmannMembershipOptions {
  int stride = 2;
  double boundary_tol = 1e-8;
  std::optional<AmalgamSpec> amalgam;  // aggregate with [B] instead of the supremum
};

// sup over the complex grid of e^{-Phi}|Tu(x)| / m(iota^{-1}(x)), u sampled on F.
MembershipReport membership_via_bargmann(const GridSymbol& u, const OrderFunction& m,
                                         const BargmannSetup& s,
                                         const BargmannMembershipOptions& opts = {});

// Ground state and Hermite functions on a position grid (n = 1), and coherent states
// pi^{-1/4} exp(-(t - y0)^2/2 + i eta0 t).
GridSymbol hermite_function(int k, const GridSpec& grid);
GridSymbol coherent_state(double y0, double eta0, const GridSpec& grid);

}  // namespace wsym
