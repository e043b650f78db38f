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

#include "wsym/symbol_class.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <random>
#include <tuple>

#include <Eigen/SVD>

#include "wsym/error.hpp"
#include "wsym/fft.hpp"
#include "wsym/quantize.hpp"

namespace wsym {

using nlohmann::json;
using RowCMat = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

namespace {

double gauss(double t, double w) { return std::exp(-t * t / (2.0 * w * w)); }


double condition_number(const CMat& m) {
  Eigen::JacobiSVD<CMat> svd(m);
  const auto& s = svd.singularValues();
  const double lo = s(s.size() - 1);
  return lo > 0.0 ? s(0) / lo : std::numeric_limits<double>::infinity();
}

// Lattice coordinates o + j s that fall into [lo, hi).
std::vector<int> lattice_range(double origin, double s, double lo, double hi) {
  std::vector<int> js;
  const int a = static_cast<int>(std::ceil((lo - origin) / s - 1e-12));
  const int b = static_cast<int>(std::floor((hi - origin) / s - 1e-12));
  for (int j = a; j <= b; ++j)
    if (origin + j * s >= lo - 1e-12 && origin + j * s < hi) js.push_back(j);
  return js;
}

double lp_of(const cd* v, std::size_t count, double p, double dv) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (std::size_t i = 0; i < count; ++i) m = std::max(m, std::abs(v[i]));
    return m;
  }
  double s = 0.0;
  if (p == 2.0) {
    for (std::size_t i = 0; i < count; ++i) s += std::norm(v[i]);
    return std::sqrt(s * dv);
  }
  for (std::size_t i = 0; i < count; ++i) s += std::pow(std::abs(v[i]), p);
  return std::pow(s * dv, 1.0 / p);
}

void require_diagonal(const Lattice& lat) {
  if (!lat.is_diagonal())
    throw PreconditionError("window families are built on diagonal lattices only");
}

struct AxisOp {
  double pos = 0.0, freq = 0.0;
  int jp = 0, jf = 0;
  CMat op;
  double norm = 0.0;
};

std::vector<AxisOp> build_axis_ops(const GridSpec& axis, const WindowFamily& w, int k, int r) {
  const double s = w.spacing(k), sf = w.spacing(r + k);
  const double o = w.lattice.origin()[k], of = w.lattice.origin()[r + k];
  const double nyq = std::numbers::pi / axis.spacing();
  std::vector<AxisOp> ops;
  for (int jp : lattice_range(o, s, -axis.extent, axis.extent)) {
    for (int jf : lattice_range(of, sf, -nyq, nyq)) {
      AxisOp a;
      a.jp = jp;
      a.jf = jf;
      a.pos = o + jp * s;
      a.freq = of + jf * sf;
      const double gp = a.pos, gf = a.freq;
      // Both axes of the discrete symbol are periodic (period 2L in position, 2 pi / h in
      // frequency), so the window profiles are periodized; a window cut off at the band edge has a
      // slowly decaying kernel that leaks mass from far away.
      const double pp = 2.0 * axis.extent, pf = 2.0 * nyq;
      a.op = axis_window_operator(
          axis,
          [&](double t) { return w.factor(k, t - gp - pp) + w.factor(k, t - gp) + w.factor(k, t - gp + pp); },
          [&](double tau) {
            return w.factor(r + k, tau - gf - pf) + w.factor(r + k, tau - gf) + w.factor(r + k, tau - gf + pf);
          });
      // Frobenius norm: a cheap upper bound of the operator norm, enough to certify pruning.
      a.norm = a.op.norm();
      ops.push_back(std::move(a));
    }
  }
  return ops;
}

// The window operators depend only on the axis and the window family, and the same family is
// usually applied to many symbols, so they are cached. Entries are never modified once stored.
const std::vector<AxisOp>& axis_ops(const GridSpec& axis, const WindowFamily& w, int k, int r) {
  using Key = std::tuple<double, int, double, double, double, double, double, double>;
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<std::vector<AxisOp>>> cache;
  const Key key{axis.extent, axis.points, w.width, w.truncation, w.spacing(k), w.spacing(r + k),
                w.lattice.origin()[k], w.lattice.origin()[r + k]};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) {
    if (cache.size() > 64) cache.clear();
    it = cache.emplace(key, std::make_unique<std::vector<AxisOp>>(build_axis_ops(axis, w, k, r))).first;
  }
  return *it->second;
}

}  // namespace

double WindowFamily::factor(int axis, double t) const {
  const double s = spacing(axis);
  const int jlo = static_cast<int>(std::floor((t - truncation) / s));
  const int jhi = static_cast<int>(std::ceil((t + truncation) / s));
  double per = 0.0;
  for (int j = jlo; j <= jhi; ++j) per += gauss(t - j * s, width);
  return gauss(t, width) / per;
}

double WindowFamily::operator()(const Vec& rho) const {
  if (rho.size() != dim()) throw DimensionError("window evaluated at a point of the wrong dimension");
  double v = 1.0;
  for (int k = 0; k < dim(); ++k) v *= factor(k, rho[k]);
  return v;
}

double WindowFamily::partition_error(const Box& box, int samples, unsigned seed) const {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    double prod = 1.0;
    for (int k = 0; k < dim(); ++k) {
      const double x = box.lower[k] + unit(rng) * (box.upper[k] - box.lower[k]);
      const double t = x - lattice.origin()[k];
      const double s = spacing(k);
      const int jlo = static_cast<int>(std::floor((t - truncation) / s)) - 1;
      const int jhi = static_cast<int>(std::ceil((t + truncation) / s)) + 1;
      double sum = 0.0;
      for (int j = jlo; j <= jhi; ++j) sum += factor(k, t - j * s);
      prod *= sum;
    }
    worst = std::max(worst, std::abs(prod - 1.0));
  }
  return worst;
}

WindowFamily build_partition(const Lattice& lat, double width) {
  if (!(width > 0.0)) throw InputError("window width must be positive");
  require_diagonal(lat);
  WindowFamily w;
  w.lattice = lat;
  w.width = width;
  double smax = 0.0;
  for (int k = 0; k < lat.dim(); ++k) {
    const double s = lat.basis()(k, k);
    if (!(s > 0.0)) throw InputError("lattice spacings must be positive");
    // The periodized Gaussian is smallest halfway between lattice points.
    if (s * s / (8.0 * width * width) > 700.0)
      throw PreconditionError("window width too small: the periodized denominator underflows");
    smax = std::max(smax, s);
  }
  w.truncation = 10.0 * width + smax;
  w.partition = true;
  return w;
}

VerdictBands VerdictBands::from_limit(double frequency_limit, double margin) {
  VerdictBands b;
  b.limit = frequency_limit - margin;
  if (!(b.limit > 0.0)) throw PreconditionError("grid too coarse for a frequency verdict");
  b.inner = 0.5 * b.limit;
  b.outer_lo = 0.65 * b.limit;
  b.outer_hi = b.limit;
  return b;
}

void MembershipReport::classify(const std::vector<double>& freq) {
  inner_sup = 0.0;
  outer_sup = 0.0;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    if (bands.in_inner(freq[i])) inner_sup = std::max(inner_sup, ratios[i]);
    if (bands.in_outer(freq[i])) outer_sup = std::max(outer_sup, ratios[i]);
  }
  member = outer_sup <= inner_sup;
}

json MembershipReport::to_json(bool with_ratios) const {
  json j;
  j["mode"] = mode;
  j["aggregation"] = aggregation;
  j["norm"] = norm;
  j["inner_sup"] = inner_sup;
  j["outer_sup"] = outer_sup;
  j["verdict"] = member ? "member" : "non-member";
  j["bands"] = {{"limit", bands.limit}, {"inner", bands.inner}, {"outer", {bands.outer_lo, bands.outer_hi}}};
  j["truncation_bound"] = truncation_bound;
  j["evaluated"] = evaluated;
  j["skipped"] = skipped;
  if (with_ratios) {
    json rs = json::array();
    for (std::size_t i = 0; i < ratios.size(); ++i)
      rs.push_back({{"point", std::vector<double>(points[i].data(), points[i].data() + points[i].size())},
                    {"ratio", ratios[i]}});
    j["ratios"] = rs;
  }
  return j;
}

CMat axis_window_operator(const GridSpec& axis, const std::function<double(double)>& f,
                          const std::function<double(double)>& g) {
  GridSymbol sym = GridSymbol::sample(1, symbol_axes(axis, 1), Domain::PhaseSpace,
                                      [&](const Vec& x) { return cd(f(x[0]) * g(x[1])); });
  return weyl_quantize(sym, axis).matrix;
}

void apply_along_axis(std::vector<cd>& data, const std::vector<int>& shape, int axis, const CMat& op) {
  std::size_t outer = 1, inner = 1;
  for (int k = 0; k < axis; ++k) outer *= shape[k];
  for (std::size_t k = axis + 1; k < shape.size(); ++k) inner *= shape[k];
  const int n = shape[axis];
  for (std::size_t o = 0; o < outer; ++o) {
    Eigen::Map<RowCMat> block(data.data() + o * n * inner, n, static_cast<Eigen::Index>(inner));
    RowCMat tmp = op * block;
    block = tmp;
  }
}

namespace {

struct StildeRun {
  MembershipReport report;
  std::vector<double> freq;
};

StildeRun stilde_ratios(const GridSymbol& a, const OrderFunction& m, const WindowFamily& w,
                        const StildeOptions& opts) {
  const int r = a.rank();
  if (a.domain != Domain::PhaseSpace || r != 2 * a.n)
    throw DimensionError("stilde_norm expects a symbol sampled on E");
  if (w.dim() != 2 * r || m.dim() != 2 * r)
    throw DimensionError("window lattice and order function must live on E x E*");
  if (!w.partition) throw PreconditionError("window family does not carry the partition flag");
  require_diagonal(w.lattice);
  if (!(opts.p >= 1.0)) throw InputError("p must lie in [1, inf]");
  const double peak = a.max_abs();
  if (peak > 0.0 && a.boundary_max() > opts.boundary_tol * peak)
    throw PreconditionError("symbol does not decay below the boundary tolerance on its grid");

  std::vector<int> shape = a.shape();
  double dv = a.cell_volume(), vol = 1.0, nyq = std::numeric_limits<double>::infinity();
  for (const auto& ax : a.axes) {
    vol *= 2.0 * ax.extent;
    nyq = std::min(nyq, std::numbers::pi / ax.spacing());
  }
  // |f|_p <= cp |f|_2 on the grid.
  const double cp = opts.p >= 2.0 ? (std::isinf(opts.p) ? std::pow(dv, -0.5) : std::pow(dv, 1.0 / opts.p - 0.5))
                                  : std::pow(vol, 1.0 / opts.p - 0.5);

  std::vector<std::vector<AxisOp>> ops(r);
  std::vector<double> maxop(r + 1, 1.0);
  for (int k = 0; k < r; ++k) ops[k] = axis_ops(a.axes[k], w, k, r);
  for (int k = r - 1; k >= 0; --k) {
    double mx = 0.0;
    for (const auto& o : ops[k]) mx = std::max(mx, o.norm);
    maxop[k] = maxop[k + 1] * mx;
  }

  StildeRun run;
  MembershipReport& rep = run.report;
  rep.mode = "lattice";
  rep.bands = VerdictBands::from_limit(nyq);

  // Smallest value of m over the truncated lattice, used to certify pruned subtrees.
  double min_m = std::numeric_limits<double>::infinity();
  {
    std::vector<std::size_t> counter(r, 0);
    Vec g(2 * r);
    while (true) {
      for (int k = 0; k < r; ++k) {
        g[k] = ops[k][counter[k]].pos;
        g[r + k] = ops[k][counter[k]].freq;
      }
      min_m = std::min(min_m, m(g));
      int k = r - 1;
      while (k >= 0 && ++counter[k] == ops[k].size()) counter[k--] = 0;
      if (k < 0) break;
    }
  }

  std::vector<std::size_t> leaves(r + 1, 1);
  for (int k = r - 1; k >= 0; --k) leaves[k] = leaves[k + 1] * ops[k].size();

  double running = 0.0;
  std::vector<int> chosen(r, 0);
  const std::size_t total = a.size();
  const int nlast = shape[r - 1];
  const std::size_t rest = total / nlast;

  // Concatenated transposes of the last-axis operators for one batched product per subtree.
  CMat last_cat(nlast, nlast * static_cast<Eigen::Index>(ops[r - 1].size()));
  for (std::size_t g = 0; g < ops[r - 1].size(); ++g)
    last_cat.middleCols(static_cast<Eigen::Index>(g) * nlast, nlast) = ops[r - 1][g].op.transpose();

  std::function<void(int, const std::vector<cd>&)> descend = [&](int depth, const std::vector<cd>& x) {
    const double xn = lp_of(x.data(), x.size(), 2.0, dv);
    const double bound = xn * maxop[depth] * cp / min_m;
    if (bound <= opts.prune_relative * running) {
      rep.skipped += leaves[depth];
      rep.truncation_bound = std::max(rep.truncation_bound, bound);
      return;
    }
    if (depth == r - 1) {
      Eigen::Map<const RowCMat> xm(x.data(), static_cast<Eigen::Index>(rest), nlast);
      RowCMat y = xm * last_cat;
      std::vector<cd> buf(total);
      for (std::size_t g = 0; g < ops[r - 1].size(); ++g) {
        for (std::size_t i = 0; i < rest; ++i)
          for (int j = 0; j < nlast; ++j) buf[i * nlast + j] = y(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(g) * nlast + j);
        chosen[r - 1] = static_cast<int>(g);
        Vec gamma(2 * r);
        std::vector<int> idx(2 * r);
        double fmax = 0.0;
        for (int k = 0; k < r; ++k) {
          const AxisOp& o = ops[k][chosen[k]];
          gamma[k] = o.pos;
          gamma[r + k] = o.freq;
          idx[k] = o.jp;
          idx[r + k] = o.jf;
          fmax = std::max(fmax, std::abs(o.freq));
        }
        const double ratio = lp_of(buf.data(), total, opts.p, dv) / m(gamma);
        running = std::max(running, ratio);
        rep.points.push_back(gamma);
        rep.indices.push_back(idx);
        rep.ratios.push_back(ratio);
        run.freq.push_back(fmax);
        ++rep.evaluated;
      }
      return;
    }
    // Visit the most massive children first so the running supremum grows early.
    std::vector<std::vector<cd>> children(ops[depth].size(), x);
    std::vector<double> mass(ops[depth].size());
    for (std::size_t g = 0; g < ops[depth].size(); ++g) {
      apply_along_axis(children[g], shape, depth, ops[depth][g].op);
      mass[g] = lp_of(children[g].data(), total, 2.0, dv);
    }
    std::vector<std::size_t> order(ops[depth].size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return mass[i] > mass[j]; });
    for (std::size_t g : order) {
      chosen[depth] = static_cast<int>(g);
      descend(depth + 1, children[g]);
      std::vector<cd>().swap(children[g]);
    }
  };
  if (peak > 0.0) {
    descend(0, a.values);
  } else {
    rep.skipped = leaves[0];
  }
  return run;
}

}  // namespace

MembershipReport stilde_norm(const GridSymbol& a, const OrderFunction& m, const WindowFamily& w,
                             const StildeOptions& opts) {
  StildeRun run = stilde_ratios(a, m, w, opts);
  MembershipReport& rep = run.report;
  rep.aggregation = "sup";
  rep.norm = 0.0;
  for (double v : rep.ratios) rep.norm = std::max(rep.norm, v);
  rep.classify(run.freq);
  return rep;
}

MembershipReport bspace_stilde_norm(const GridSymbol& a, const OrderFunction& m,
                                    const WindowFamily& w, const SeqSpaceSpec& b,
                                    const StildeOptions& opts) {
  StildeRun run = stilde_ratios(a, m, w, opts);
  MembershipReport& rep = run.report;
  rep.aggregation = b.describe();
  rep.classify(run.freq);
  if (rep.indices.empty()) {
    rep.norm = 0.0;
    return rep;
  }
  const int d = static_cast<int>(rep.indices.front().size());
  std::vector<int> lo(d, std::numeric_limits<int>::max()), hi(d, std::numeric_limits<int>::min());
  for (const auto& idx : rep.indices)
    for (int k = 0; k < d; ++k) lo[k] = std::min(lo[k], idx[k]), hi[k] = std::max(hi[k], idx[k]);
  std::vector<int> shape(d);
  for (int k = 0; k < d; ++k) shape[k] = hi[k] - lo[k] + 1;
  LatticeFunction seq(lo, shape);
  for (std::size_t i = 0; i < rep.indices.size(); ++i) {
    std::size_t flat = 0;
    for (int k = 0; k < d; ++k) flat = flat * shape[k] + (rep.indices[i][k] - lo[k]);
    seq.values[flat] = rep.ratios[i];
  }
  rep.norm = seq_norm(seq, b);
  return rep;
}

MembershipReport stft_membership(const GridSymbol& a, const OrderFunction& m,
                                 const WindowFamily& spatial, const StftOptions& opts) {
  const int r = a.rank();
  if (spatial.dim() != r) throw DimensionError("spatial window lattice must live on the symbol's space");
  if (m.dim() != 2 * r) throw DimensionError("order function must live on the space times its dual");
  if (!spatial.partition) throw PreconditionError("window family does not carry the partition flag");
  require_diagonal(spatial.lattice);

  const std::vector<int> shape = a.shape();
  const double dv = a.cell_volume();
  double nyq = std::numeric_limits<double>::infinity();
  std::vector<std::vector<int>> js(r);
  for (int k = 0; k < r; ++k) {
    const auto& ax = a.axes[k];
    nyq = std::min(nyq, std::numbers::pi / ax.spacing());
    js[k] = lattice_range(spatial.lattice.origin()[k], spatial.spacing(k), -ax.extent, ax.extent);
  }
  MembershipReport rep;
  rep.mode = "stft";
  rep.bands = VerdictBands::from_limit(nyq);
  std::vector<double> freq;

  // Frequency of every output bin after the transform, and the bins near the Nyquist edge.
  const std::size_t total = a.size();
  std::vector<Vec> xstar(total, Vec(r));
  std::vector<double> fmax(total, 0.0);
  std::vector<std::size_t> src(total);
  for (std::size_t f = 0; f < total; ++f) {
    std::size_t rem = f, s = 0;
    std::vector<int> idx(r);
    for (int k = r - 1; k >= 0; --k) {
      idx[k] = static_cast<int>(rem % shape[k]);
      rem /= shape[k];
    }
    for (int k = 0; k < r; ++k) {
      const GridSpec dual = a.axes[k].dual();
      xstar[f][k] = dual.coord(idx[k]);
      fmax[f] = std::max(fmax[f], std::abs(xstar[f][k]));
      s = s * shape[k] + static_cast<std::size_t>((idx[k] + shape[k] / 2) % shape[k]);
    }
    src[f] = s;
  }

  double energy = 0.0, edge = 0.0;
  std::vector<std::size_t> counter(r, 0);
  std::vector<cd> buf(total);
  const double peak = a.max_abs();
  while (peak > 0.0) {
    Vec j(r);
    for (int k = 0; k < r; ++k) j[k] = spatial.lattice.origin()[k] + js[k][counter[k]] * spatial.spacing(k);
    double l1 = 0.0;
    for (std::size_t f = 0; f < total; ++f) {
      const Vec x = a.point(f);
      double chi = 1.0;
      for (int k = 0; k < r; ++k) chi *= spatial.factor(k, x[k] - j[k]);
      buf[f] = chi * a.values[f];
      l1 += std::abs(buf[f]);
    }
    if (l1 > 0.0) {
      fft_inplace(buf.data(), shape, FftDirection::Forward);
      energy += std::accumulate(buf.begin(), buf.end(), 0.0, [](double s, cd v) { return s + std::norm(v); });
      edge += spectral_edge_fraction(buf, shape, 2) *
              std::accumulate(buf.begin(), buf.end(), 0.0, [](double s, cd v) { return s + std::norm(v); });
      Vec pt(2 * r);
      pt.head(r) = j;
      for (std::size_t f = 0; f < total; ++f) {
        pt.tail(r) = xstar[f];
        const double ratio = dv * std::abs(buf[src[f]]) / m(pt);
        rep.points.push_back(pt);
        rep.ratios.push_back(ratio);
        freq.push_back(fmax[f]);
        ++rep.evaluated;
      }
    } else {
      rep.skipped += total;
    }
    int k = r - 1;
    while (k >= 0 && ++counter[k] == js[k].size()) counter[k--] = 0;
    if (k < 0) break;
  }
  if (energy > 0.0 && edge / energy > opts.alias_tol)
    throw AliasingError("spectral mass near the Nyquist edge is " + std::to_string(edge / energy) +
                        " of the total");
  for (double v : rep.ratios) rep.norm = std::max(rep.norm, v);
  rep.classify(freq);
  return rep;
}

GridSymbol DualWindow::reconstruct(const GridSymbol& a) const {
  if (a.rank() != static_cast<int>(axes.size())) throw DimensionError("dual window rank mismatch");
  GridSymbol out = a;
  const std::vector<int> shape = a.shape();
  for (std::size_t k = 0; k < axes.size(); ++k) apply_along_axis(out.values, shape, static_cast<int>(k), axes[k].sum);
  return out;
}

DualWindow dual_window(const WindowFamily& w, double epsilon, const std::vector<GridSpec>& working,
                       double max_condition) {
  const int r = static_cast<int>(working.size());
  if (w.dim() != 2 * r) throw DimensionError("window lattice must live on the working space times its dual");
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  require_diagonal(w.lattice);
  DualWindow dw;
  dw.epsilon = epsilon;
  dw.condition = 1.0;
  for (int k = 0; k < r; ++k) {
    DualWindow::Axis ax;
    ax.grid = working[k];
    const int n = working[k].points;
    CMat s = CMat::Zero(n, n);
    std::vector<CMat> tilde;
    for (const AxisOp& o : axis_ops(working[k], w, k, r)) {
      const double gp = o.pos, gf = o.freq;
      auto plateau = [epsilon](double t) { return std::exp(-std::pow(epsilon * t, 4)); };
      CMat t = axis_window_operator(working[k], [&](double x) { return plateau(x - gp); },
                                    [&](double xi) { return plateau(xi - gf); });
      s += t * o.op;
      ax.points.emplace_back(o.pos, o.freq);
      ax.chi.push_back(o.op);
      tilde.push_back(std::move(t));
    }
    ax.condition = condition_number(s);
    dw.condition *= ax.condition;
    if (!(dw.condition <= max_condition))
      throw IllConditionedError("dual window inversion has condition number " + std::to_string(dw.condition) +
                                "; use a smaller epsilon");
    Eigen::PartialPivLU<CMat> lu(s);
    ax.sum = CMat::Zero(n, n);
    for (std::size_t g = 0; g < tilde.size(); ++g) {
      ax.psi.push_back(lu.solve(tilde[g]));
      ax.sum += ax.psi.back() * ax.chi[g];
    }
    dw.axes.push_back(std::move(ax));
  }
  // Interior test vectors: Gaussian packets well inside the working box.
  double worst = 0.0;
  const double offsets[] = {0.0, 0.8, -1.3};
  for (double c : offsets) {
    GridSymbol t = GridSymbol::sample(std::max(1, r / 2), working, r % 2 == 0 ? Domain::PhaseSpace : Domain::Position,
                                      [&](const Vec& x) {
                                        double e = 0.0;
                                        for (int k = 0; k < r; ++k) e += (x[k] - c) * (x[k] - c);
                                        return cd(std::exp(-0.5 * e), 0.0) * std::polar(1.0, 0.5 * c * x[0]);
                                      });
    GridSymbol back = dw.reconstruct(t);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      num += std::norm(back.values[i] - t.values[i]);
      den += std::norm(t.values[i]);
    }
    worst = std::max(worst, std::sqrt(num / den));
  }
  dw.residual = worst;
  return dw;
}

}  // namespace wsym
