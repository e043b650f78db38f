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

#include "wsym/bspaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "wsym/error.hpp"

namespace wsym {

using nlohmann::json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double p_norm(const std::vector<double>& v, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : v) m = std::max(m, x);
    return m;
  }
  double s = 0.0;
  for (double x : v) s += std::pow(x, p);
  return std::pow(s, 1.0 / p);
}

json exponent_json(double p) { return std::isinf(p) ? json("inf") : json(p); }

double exponent_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInf;
    throw InputError("exponent must be a number or \"inf\"");
  }
  return j.get<double>();
}

void check_exponent(double p) {
  if (!(p >= 1.0)) throw InputError("sequence space exponent must lie in [1, inf]");
}

// Iterates over all integer points of the box [-r, r]^dim.
LatticeFunction centered_box(int dim, int r) {
  return LatticeFunction(std::vector<int>(dim, -r), std::vector<int>(dim, 2 * r + 1));
}

double bracket(const Vec& v) { return std::sqrt(1.0 + v.squaredNorm()); }

// Schur constant of the kernel <x - y>^{-N} between two finite point sets.
double schur_constant(const std::vector<Vec>& a, const std::vector<Vec>& b, double n_decay) {
  std::vector<double> rows(a.size(), 0.0), cols(b.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double k = std::pow(bracket(a[i] - b[j]), -n_decay);
      rows[i] += k;
      cols[j] += k;
    }
  return std::max(*std::max_element(rows.begin(), rows.end()),
                  *std::max_element(cols.begin(), cols.end()));
}

std::vector<Vec> box_points(int dim, int r, double scale) {
  LatticeFunction box = centered_box(dim, r);
  std::vector<Vec> pts;
  pts.reserve(box.size());
  for (std::size_t f = 0; f < box.size(); ++f) {
    auto idx = box.index(f);
    Vec p(dim);
    for (int d = 0; d < dim; ++d) p[d] = scale * idx[d];
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

LatticeFunction::LatticeFunction(std::vector<int> lo_, std::vector<int> shape_)
    : lo(std::move(lo_)), shape(std::move(shape_)) {
  if (lo.size() != shape.size()) throw DimensionError("lattice function box rank mismatch");
  std::size_t total = 1;
  for (int s : shape) {
    if (s < 0) throw InputError("negative lattice box extent");
    total *= static_cast<std::size_t>(s);
  }
  values.assign(total, cd(0.0));
}

LatticeFunction LatticeFunction::delta(int dim) {
  LatticeFunction u(std::vector<int>(dim, 0), std::vector<int>(dim, 1));
  u.values[0] = 1.0;
  return u;
}

std::vector<int> LatticeFunction::index(std::size_t flat) const {
  std::vector<int> idx(shape.size());
  for (int d = dim() - 1; d >= 0; --d) {
    idx[d] = lo[d] + static_cast<int>(flat % shape[d]);
    flat /= shape[d];
  }
  return idx;
}

cd LatticeFunction::at(const std::vector<int>& idx) const {
  std::size_t flat = 0;
  for (int d = 0; d < dim(); ++d) {
    const int k = idx[d] - lo[d];
    if (k < 0 || k >= shape[d]) return 0.0;
    flat = flat * shape[d] + k;
  }
  return values[flat];
}

LatticeFunction LatticeFunction::translated(const std::vector<int>& shift) const {
  LatticeFunction out = *this;
  for (int d = 0; d < dim(); ++d) out.lo[d] += shift[d];
  return out;
}

LatticeFunction LatticeFunction::abs() const {
  LatticeFunction out = *this;
  for (auto& v : out.values) v = std::abs(v);
  return out;
}

std::string SeqSpaceSpec::describe() const {
  auto e = [](double p) { return std::isinf(p) ? std::string("inf") : std::to_string(p); };
  if (kind == Kind::Lp) return "l^" + e(p);
  return "l^{" + e(p) + "," + e(q) + "} split " + std::to_string(split);
}

json SeqSpaceSpec::to_json() const {
  json j;
  j["kind"] = kind == Kind::Lp ? "lp" : "mixed";
  j["p"] = exponent_json(p);
  if (kind == Kind::Mixed) {
    j["q"] = exponent_json(q);
    j["split"] = split;
  }
  return j;
}

SeqSpaceSpec SeqSpaceSpec::from_json(const json& j) {
  SeqSpaceSpec s;
  const std::string kind = j.value("kind", std::string("lp"));
  if (kind == "lp") {
    s.kind = Kind::Lp;
  } else if (kind == "mixed") {
    s.kind = Kind::Mixed;
  } else {
    throw InputError("unknown sequence space kind '" + kind + "'");
  }
  s.p = exponent_from_json(j.at("p"));
  s.q = s.kind == Kind::Mixed ? exponent_from_json(j.at("q")) : s.p;
  s.split = s.kind == Kind::Mixed ? j.at("split").get<int>() : 0;
  check_exponent(s.p);
  check_exponent(s.q);
  return s;
}

double seq_norm(const LatticeFunction& u, const SeqSpaceSpec& b) {
  check_exponent(b.p);
  if (b.kind == SeqSpaceSpec::Kind::Lp) {
    std::vector<double> mods(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) mods[i] = std::abs(u.values[i]);
    return p_norm(mods, b.p);
  }
  check_exponent(b.q);
  if (b.split <= 0 || b.split >= u.dim()) throw DimensionError("mixed norm split outside the rank");
  std::size_t outer = 1, inner = 1;
  for (int d = 0; d < b.split; ++d) outer *= u.shape[d];
  for (int d = b.split; d < u.dim(); ++d) inner *= u.shape[d];
  std::vector<double> rows(outer), mods(inner);
  for (std::size_t a = 0; a < outer; ++a) {
    for (std::size_t k = 0; k < inner; ++k) mods[k] = std::abs(u.values[a * inner + k]);
    rows[a] = p_norm(mods, b.p);
  }
  return p_norm(rows, b.q);
}

LatticeFunction convolve(const LatticeFunction& f, const LatticeFunction& u) {
  if (f.dim() != u.dim()) throw DimensionError("convolution of lattice functions of different rank");
  std::vector<int> lo(f.dim()), shape(f.dim());
  for (int d = 0; d < f.dim(); ++d) {
    lo[d] = f.lo[d] + u.lo[d];
    shape[d] = std::max(0, f.shape[d] + u.shape[d] - 1);
  }
  LatticeFunction out(lo, shape);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.values[i] == 0.0) continue;
    auto fi = f.index(i);
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (u.values[j] == 0.0) continue;
      auto uj = u.index(j);
      std::size_t flat = 0;
      for (int d = 0; d < f.dim(); ++d) flat = flat * shape[d] + (fi[d] + uj[d] - lo[d]);
      out.values[flat] += f.values[i] * u.values[j];
    }
  }
  return out;
}

ConvolveReport convolve_bound_check(const LatticeFunction& f, const LatticeFunction& u,
                                    const SeqSpaceSpec& b, int trials, std::uint64_t seed) {
  ConvolveReport rep;
  const double f1 = seq_norm(f, SeqSpaceSpec::lp(1.0));
  const double ub = seq_norm(u, b);
  rep.lhs = seq_norm(convolve(f, u), b);
  rep.rhs = f1 * ub;
  rep.holds = rep.lhs <= rep.rhs * (1.0 + 1e-12) + 1e-300;

  // Dominated kernels |k(a, b)| <= f(a - b) acting on u; the output box is that of f * u.
  LatticeFunction box = convolve(f, u);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<int> diff(f.dim());
  for (int t = 0; t < trials; ++t) {
    LatticeFunction v = box;
    std::fill(v.values.begin(), v.values.end(), cd(0.0));
    for (std::size_t a = 0; a < v.size(); ++a) {
      auto ia = v.index(a);
      cd acc = 0.0;
      for (std::size_t j = 0; j < u.size(); ++j) {
        if (u.values[j] == 0.0) continue;
        auto ij = u.index(j);
        for (int d = 0; d < f.dim(); ++d) diff[d] = ia[d] - ij[d];
        const double bound = std::abs(f.at(diff));
        if (bound == 0.0) continue;
        acc += bound * unit(rng) * std::polar(1.0, 2.0 * M_PI * unit(rng)) * u.values[j];
      }
      v.values[a] = acc;
    }
    const double ratio = rep.rhs > 0.0 ? seq_norm(v, b) / rep.rhs : 0.0;
    rep.dominated_max_ratio = std::max(rep.dominated_max_ratio, ratio);
    ++rep.trials;
  }
  if (rep.dominated_max_ratio > 1.0 + 1e-12) rep.holds = false;
  return rep;
}

bool precedes_rule(const SeqSpaceSpec& b, const SeqSpaceSpec& bt) {
  if (b.kind != bt.kind) return false;
  if (b.kind == SeqSpaceSpec::Kind::Lp) return b.p <= bt.p;
  return b.split == bt.split && b.p <= bt.p && b.q <= bt.q;
}

PrecedesReport precedes_check(const SeqSpaceSpec& b, const SeqSpaceSpec& bt, double n_decay,
                              int dim, int trials, std::uint64_t seed, double second_scale,
                              int radius) {
  if (!(n_decay > dim)) throw PreconditionError("the decay N must exceed the lattice dimension");
  PrecedesReport rep;
  rep.rule = precedes_rule(b, bt);

  const std::vector<Vec> src = box_points(dim, radius, 1.0);
  const int r2 = static_cast<int>(std::floor(radius / second_scale));
  const std::vector<Vec> dst = box_points(dim, r2, second_scale);

  // Calibrated constant: Schur bound of the kernel, per factor for mixed spaces where
  // <(a, b)>^{-N} <= <a>^{-N/2} <b>^{-N/2}.
  if (b.kind == SeqSpaceSpec::Kind::Lp) {
    rep.constant = schur_constant(dst, src, n_decay);
  } else {
    const int s = b.split;
    rep.constant = schur_constant(box_points(s, r2, second_scale), box_points(s, radius, 1.0), n_decay / 2) *
                   schur_constant(box_points(dim - s, r2, second_scale), box_points(dim - s, radius, 1.0),
                                  n_decay / 2);
  }

  LatticeFunction ubox = centered_box(dim, radius);
  LatticeFunction vbox = centered_box(dim, r2);
  std::vector<double> kern(dst.size() * src.size());
  for (std::size_t i = 0; i < dst.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j)
      kern[i * src.size() + j] = std::pow(bracket(dst[i] - src[j]), -n_decay);

  auto dominated = [&](const LatticeFunction& u) {
    LatticeFunction v = vbox;
    for (std::size_t i = 0; i < dst.size(); ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < src.size(); ++j) acc += kern[i * src.size() + j] * std::abs(u.values[j]);
      v.values[i] = acc;
    }
    return v;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    LatticeFunction u = ubox;
    const double density = 0.02 + 0.98 * unit(rng);
    const double spread = 4.0 * unit(rng);
    for (auto& v : u.values)
      if (unit(rng) < density) v = std::exp(spread * (unit(rng) - 0.5));
    if (t == 0) {
      std::fill(u.values.begin(), u.values.end(), cd(0.0));
      u.values[u.size() / 2] = 1.0;
    }
    const double un = seq_norm(u, b);
    if (un == 0.0) continue;
    const double ratio = seq_norm(dominated(u), bt) / un;
    rep.max_ratio = std::max(rep.max_ratio, ratio);
    ++rep.trials;
  }
  if (rep.rule && rep.max_ratio > rep.constant * (1.0 + 1e-9)) rep.falsified = true;

  // Growing-support witness: u = 1 on a centered cube of side k.
  for (int side = 1; side <= radius + 1; side *= 2) {
    LatticeFunction u = ubox;
    for (std::size_t f = 0; f < u.size(); ++f) {
      auto idx = u.index(f);
      bool inside = true;
      for (int v : idx) inside = inside && v >= -side / 2 && v < side - side / 2;
      if (inside) u.values[f] = 1.0;
    }
    rep.witness_ratios.push_back(seq_norm(dominated(u), bt) / seq_norm(u, b));
  }
  const double first = rep.witness_ratios.front(), last = rep.witness_ratios.back();
  rep.witness_grows = last > 2.0 * first && last > rep.constant * (1.0 + 1e-9);
  rep.consistent = rep.rule ? !rep.falsified && !rep.witness_grows : rep.witness_grows;
  return rep;
}

json AmalgamSpec::to_json() const {
  json j;
  j["B"] = b.to_json();
  j["lattice"] = std::vector<double>(spacing.data(), spacing.data() + spacing.size());
  j["N"] = decay;
  j["window"] = window == Window::Cell ? "cell" : "support";
  return j;
}

LatticeFunction amalgam_sequence(const GridSymbol& u, const AmalgamSpec& spec) {
  const int d = u.rank();
  if (spec.spacing.size() != d) throw DimensionError("amalgam lattice rank differs from the grid rank");
  if (!(spec.decay > d)) throw PreconditionError("amalgam decay N must exceed the dimension");
  std::vector<int> lo(d), shape(d);
  for (int k = 0; k < d; ++k) {
    const double s = spec.spacing[k];
    if (!(s > 0.0)) throw InputError("lattice spacing must be positive");
    const double ext = u.axes[k].extent;
    const int jmin = static_cast<int>(std::ceil(-ext / s - 0.5 + 1e-12));
    const int jmax = static_cast<int>(std::floor(ext / s + 0.5 - 1e-12));
    lo[k] = jmin;
    shape[k] = jmax - jmin + 1;
  }
  LatticeFunction seq(lo, shape);
  // Every grid point feeds the lattice points whose window contains it.
  const double reach = spec.window == AmalgamSpec::Window::Cell ? 0.5 : 1.0;
  std::vector<int> first(d), count(d), idx(d);
  for (std::size_t f = 0; f < u.size(); ++f) {
    const double mod = std::abs(u.values[f]);
    if (mod == 0.0) continue;
    const Vec x = u.point(f);
    bool any = true;
    for (int k = 0; k < d; ++k) {
      const double t = x[k] / spec.spacing[k];
      // Cells are half-open [g - s/2, g + s/2) so each point lies in exactly one of them.
      int a = reach == 0.5 ? static_cast<int>(std::floor(t + 0.5)) : static_cast<int>(std::floor(t - 1.0)) + 1;
      int b = reach == 0.5 ? a : static_cast<int>(std::ceil(t + 1.0)) - 1;
      a = std::max(a, lo[k]);
      b = std::min(b, lo[k] + shape[k] - 1);
      if (a > b) any = false;
      first[k] = a;
      count[k] = b - a + 1;
    }
    if (!any) continue;
    std::size_t combos = 1;
    for (int k = 0; k < d; ++k) combos *= count[k];
    for (std::size_t c = 0; c < combos; ++c) {
      std::size_t r = c, flat = 0;
      for (int k = d - 1; k >= 0; --k) {
        idx[k] = first[k] + static_cast<int>(r % count[k]);
        r /= count[k];
      }
      for (int k = 0; k < d; ++k) flat = flat * shape[k] + (idx[k] - lo[k]);
      if (mod > std::abs(seq.values[flat])) seq.values[flat] = mod;
    }
  }
  return seq;
}

double amalgam_norm(const GridSymbol& u, const AmalgamSpec& spec) {
  return seq_norm(amalgam_sequence(u, spec), spec.b);
}

Weight pullback_by_q(const Weight& m, int n) {
  return [m, n](const Vec& xy) {
    SymplecticSpace space(n);
    const Vec x = xy.head(2 * n), y = xy.tail(2 * n);
    Vec q(4 * n);
    q.head(2 * n) = 0.5 * (x + y);
    q.tail(2 * n) = space.apply_j_inverse(y - x);
    return m(q);
  };
}

ComposeConstantResult compose_constant_estimate(const Weight& m1, const SeqSpaceSpec& b1, const Weight& m2,
                                         const SeqSpaceSpec& b2, const Weight& m3,
                                         const SeqSpaceSpec& b3, int dim, int radius, int trials,
                                         std::uint64_t seed) {
  if (radius < 1) throw InputError("radius must be positive");
  auto estimate = [&](int r) {
    const std::vector<Vec> pts = box_points(dim, r, 1.0);
    const std::size_t np = pts.size();
    std::vector<double> w1(np * np), w2(np), w3(np);
    Vec ab(2 * dim);
    for (std::size_t a = 0; a < np; ++a) {
      w2[a] = m2(pts[a]);
      w3[a] = m3(pts[a]);
      for (std::size_t c = 0; c < np; ++c) {
        ab.head(dim) = pts[a];
        ab.tail(dim) = pts[c];
        w1[a * np + c] = m1(ab);
      }
    }
    LatticeFunction box1 = centered_box(2 * dim, r), box2 = centered_box(dim, r);
    auto evaluate = [&](LatticeFunction v1, LatticeFunction v2) {
      const double n1 = seq_norm(v1, b1), n2 = seq_norm(v2, b2);
      if (n1 == 0.0 || n2 == 0.0) return 0.0;
      LatticeFunction k3 = box2;
      for (std::size_t a = 0; a < np; ++a) {
        cd acc = 0.0;
        for (std::size_t c = 0; c < np; ++c)
          acc += w1[a * np + c] * v1.values[a * np + c] * w2[c] * v2.values[c];
        k3.values[a] = acc / w3[a];
      }
      return seq_norm(k3, b3) / (n1 * n2);
    };
    double best = 0.0;
    // Extremal candidates: flat, single point, diagonal and single row.
    LatticeFunction ones1 = box1, ones2 = box2;
    std::fill(ones1.values.begin(), ones1.values.end(), cd(1.0));
    std::fill(ones2.values.begin(), ones2.values.end(), cd(1.0));
    best = std::max(best, evaluate(ones1, ones2));
    LatticeFunction d1 = box1, d2 = box2;
    d1.values[(np / 2) * np + np / 2] = 1.0;
    d2.values[np / 2] = 1.0;
    best = std::max(best, evaluate(d1, d2));
    LatticeFunction diag = box1, row = box1;
    for (std::size_t a = 0; a < np; ++a) {
      diag.values[a * np + a] = 1.0;
      row.values[(np / 2) * np + a] = 1.0;
    }
    best = std::max(best, evaluate(diag, ones2));
    best = std::max(best, evaluate(row, ones2));
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(r));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < trials; ++t) {
      LatticeFunction v1 = box1, v2 = box2;
      const double dens = 0.05 + 0.95 * unit(rng);
      for (auto& v : v1.values)
        if (unit(rng) < dens) v = unit(rng);
      for (auto& v : v2.values)
        if (unit(rng) < dens) v = unit(rng);
      best = std::max(best, evaluate(v1, v2));
    }
    return best;
  };
  ComposeConstantResult res;
  res.radius = 2 * radius;
  res.trials = trials;
  res.constant_small = estimate(radius);
  res.constant = estimate(2 * radius);
  res.growth = res.constant_small > 0.0 ? res.constant / res.constant_small - 1.0 : 0.0;
  res.diverges = !std::isfinite(res.constant) || res.growth > 0.10;
  return res;
}

KernelActionReport kernel_action(const CMat& k, const std::vector<cd>& u,
                                 const std::vector<GridSpec>& axes, const Weight& m1,
                                 const Weight& m2, const Weight& m3, const SeqSpaceSpec& b1,
                                 const SeqSpaceSpec& b2, const SeqSpaceSpec& b3, double spacing,
                                 double constant) {
  const int d = static_cast<int>(axes.size());
  GridSymbol ugrid(1, axes, Domain::Position);
  const std::size_t s = ugrid.size();
  if (static_cast<std::size_t>(k.rows()) != s || static_cast<std::size_t>(k.cols()) != s || u.size() != s)
    throw DimensionError("kernel and function do not match the grid");
  double dz = 1.0;
  for (const auto& a : axes) dz *= a.spacing();

  KernelActionReport rep;
  rep.constant = constant;
  Eigen::Map<const CVec> uv(u.data(), static_cast<Eigen::Index>(s));
  CVec k3 = k * uv * dz;
  rep.k3.assign(k3.data(), k3.data() + s);

  // Cell index of each grid point along every axis.
  std::vector<std::vector<int>> cell(s, std::vector<int>(d));
  std::vector<Vec> pts(s);
  for (std::size_t f = 0; f < s; ++f) {
    pts[f] = ugrid.point(f);
    for (int a = 0; a < d; ++a) cell[f][a] = static_cast<int>(std::floor(pts[f][a] / spacing + 0.5));
  }
  std::vector<int> lo(d), hi(d);
  for (int a = 0; a < d; ++a) {
    lo[a] = std::numeric_limits<int>::max();
    hi[a] = std::numeric_limits<int>::min();
    for (std::size_t f = 0; f < s; ++f) lo[a] = std::min(lo[a], cell[f][a]), hi[a] = std::max(hi[a], cell[f][a]);
  }
  std::vector<int> shape(d);
  for (int a = 0; a < d; ++a) shape[a] = hi[a] - lo[a] + 1;
  auto cell_flat = [&](std::size_t f) {
    std::size_t flat = 0;
    for (int a = 0; a < d; ++a) flat = flat * shape[a] + (cell[f][a] - lo[a]);
    return flat;
  };
  std::vector<int> lo2(lo), shape2(shape);
  lo2.insert(lo2.end(), lo.begin(), lo.end());
  shape2.insert(shape2.end(), shape.begin(), shape.end());
  LatticeFunction seq1(lo2, shape2), seq2(lo, shape), seq3(lo, shape);
  const std::size_t nc = seq2.size();

  std::vector<double> m2v(s), m3v(s);
  std::vector<std::size_t> cf(s);
  std::vector<std::size_t> members(nc, 0);
  for (std::size_t f = 0; f < s; ++f) {
    m2v[f] = m2(pts[f]);
    m3v[f] = m3(pts[f]);
    cf[f] = cell_flat(f);
    ++members[cf[f]];
    auto upd = [](cd& slot, double v) {
      if (v > slot.real()) slot = v;
    };
    upd(seq2.values[cf[f]], std::abs(u[f]) / m2v[f]);
    upd(seq3.values[cf[f]], std::abs(k3[f]) / m3v[f]);
  }
  // Lattice values of the weights at the cell centres.
  std::vector<Vec> centres(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    auto idx = seq2.index(c);
    centres[c] = Vec(d);
    for (int a = 0; a < d; ++a) centres[c][a] = spacing * idx[a];
  }
  std::vector<double> g(nc * nc);
  Vec ab(2 * d);
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = 0; b < nc; ++b) {
      ab.head(d) = centres[a];
      ab.tail(d) = centres[b];
      g[a * nc + b] = m1(ab) * m2(centres[b]) / m3(centres[a]);
    }
  double fluct = 0.0;
  for (std::size_t x = 0; x < s; ++x)
    for (std::size_t z = 0; z < s; ++z) {
      ab.head(d) = pts[x];
      ab.tail(d) = pts[z];
      const double w1 = m1(ab);
      const std::size_t slot = cf[x] * nc + cf[z];
      const double ratio = std::abs(k(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(z))) / w1;
      if (ratio > seq1.values[slot].real()) seq1.values[slot] = ratio;
      fluct = std::max(fluct, w1 * m2v[z] / m3v[x] / g[slot]);
    }
  std::size_t max_members = 0;
  for (auto c : members) max_members = std::max(max_members, c);
  const double vol = static_cast<double>(max_members) * dz;

  rep.fluctuation = fluct;
  rep.k_norm = seq_norm(seq1, b1);
  rep.u_norm = seq_norm(seq2, b2);
  rep.lhs = seq_norm(seq3, b3);
  rep.rhs = fluct * vol * constant * rep.k_norm * rep.u_norm;
  rep.holds = rep.lhs <= rep.rhs * (1.0 + 1e-9);
  return rep;
}

}  // namespace wsym
