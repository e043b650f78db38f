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

#include "wsym/order_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "wsym/error.hpp"

namespace wsym {

using nlohmann::json;

namespace {

double bracket_norm(const Vec& v) { return std::sqrt(1.0 + v.squaredNorm()); }

bool column_used(const BracketAtom& a, int c) { return a.matrix.col(c).cwiseAbs().maxCoeff() > 0.0; }

}  // namespace

BracketProduct::BracketProduct(int dim, double constant, std::vector<BracketAtom> atoms)
    : dim_(dim), constant_(constant) {
  for (auto& a : atoms) {
    if (a.matrix.cols() != dim || a.offset.size() != a.matrix.rows())
      throw DimensionError("bracket atom does not match the expression dimension");
    if (a.exponent == 0.0) continue;
    // Atoms that do not read any coordinate are numbers; fold them into the constant.
    if (a.is_constant()) {
      constant_ *= std::pow(bracket_norm(a.offset), a.exponent);
      continue;
    }
    atoms_.push_back(std::move(a));
  }
  flatten();
}

void BracketProduct::flatten() {
  flat_.clear();
  rows_.clear();
  for (const auto& a : atoms_) {
    rows_.push_back(static_cast<int>(a.matrix.rows()));
    for (int r = 0; r < a.matrix.rows(); ++r)
      for (int c = 0; c < dim_; ++c) flat_.push_back(a.matrix(r, c));
    for (int r = 0; r < a.matrix.rows(); ++r) flat_.push_back(a.offset[r]);
  }
}

double BracketProduct::log_eval(const double* x) const {
  double acc = std::log(constant_);
  const double* p = flat_.data();
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const int rows = rows_[i];
    const double* off = p + rows * dim_;
    double s = 1.0;
    for (int r = 0; r < rows; ++r) {
      double v = off[r];
      for (int c = 0; c < dim_; ++c) v += p[r * dim_ + c] * x[c];
      s += v * v;
    }
    acc += 0.5 * atoms_[i].exponent * std::log(s);
    p = off + rows;
  }
  return acc;
}

double BracketProduct::eval(const double* x) const {
  if (atoms_.empty()) return constant_;
  double prod = constant_;
  const double* p = flat_.data();
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const int rows = rows_[i];
    const double* off = p + rows * dim_;
    double s = 1.0;
    for (int r = 0; r < rows; ++r) {
      double v = off[r];
      for (int c = 0; c < dim_; ++c) v += p[r * dim_ + c] * x[c];
      s += v * v;
    }
    prod *= std::pow(s, 0.5 * atoms_[i].exponent);
    p = off + rows;
  }
  return prod;
}

BracketProduct BracketProduct::pullback(const Mat& s, const Vec& t) const {
  if (s.rows() != dim_ || t.size() != dim_) throw DimensionError("pullback map does not match dimension");
  std::vector<BracketAtom> out;
  for (const auto& a : atoms_) out.push_back({a.matrix * s, a.matrix * t + a.offset, a.exponent});
  return BracketProduct(static_cast<int>(s.cols()), constant_, std::move(out));
}

BracketProduct BracketProduct::power(double p) const {
  std::vector<BracketAtom> out = atoms_;
  for (auto& a : out) a.exponent *= p;
  return BracketProduct(dim_, std::pow(constant_, p), std::move(out));
}

BracketProduct BracketProduct::operator*(const BracketProduct& other) const {
  if (other.dim_ != dim_) throw DimensionError("product of expressions of different dimension");
  std::vector<BracketAtom> out = atoms_;
  out.insert(out.end(), other.atoms_.begin(), other.atoms_.end());
  return BracketProduct(dim_, constant_ * other.constant_, std::move(out));
}

double BracketProduct::decay_degree() const {
  const int k = static_cast<int>(atoms_.size());
  if (k > 20) throw PreconditionError("too many atoms for power counting");
  double best = -std::numeric_limits<double>::infinity();
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    Mat kernel;
    if (mask == 0) {
      kernel = Mat::Identity(dim_, dim_);
    } else {
      int rows = 0;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) rows += static_cast<int>(atoms_[i].matrix.rows());
      Mat stacked(rows, dim_);
      int r = 0;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) {
          stacked.middleRows(r, atoms_[i].matrix.rows()) = atoms_[i].matrix;
          r += static_cast<int>(atoms_[i].matrix.rows());
        }
      Eigen::FullPivLU<Mat> lu(stacked);
      lu.setThreshold(1e-10);
      if (lu.rank() == dim_) continue;
      kernel = lu.kernel();
    }
    double degree = static_cast<double>(kernel.cols());
    for (int i = 0; i < k; ++i) {
      double scale = std::max(1.0, atoms_[i].matrix.cwiseAbs().maxCoeff());
      if ((atoms_[i].matrix * kernel).cwiseAbs().maxCoeff() > 1e-10 * scale) degree += atoms_[i].exponent;
    }
    best = std::max(best, degree);
  }
  return best;
}

bool BracketProduct::integrable() const { return decay_degree() < -1e-9; }

bool BracketProduct::depends_on(int lo, int hi) const {
  for (const auto& a : atoms_)
    for (int c = lo; c < hi; ++c)
      if (column_used(a, c)) return true;
  return false;
}

bool BracketProduct::split(int lo, int hi, BracketProduct& inside, BracketProduct& outside) const {
  std::vector<BracketAtom> in, out;
  const int w = hi - lo;
  for (const auto& a : atoms_) {
    bool reads_in = false, reads_out = false;
    for (int c = 0; c < dim_; ++c)
      if (column_used(a, c)) (c >= lo && c < hi ? reads_in : reads_out) = true;
    if (reads_in && reads_out) return false;
    if (reads_in) {
      in.push_back({a.matrix.middleCols(lo, w), a.offset, a.exponent});
    } else {
      Mat m(a.matrix.rows(), dim_ - w);
      m << a.matrix.leftCols(lo), a.matrix.rightCols(dim_ - hi);
      out.push_back({m, a.offset, a.exponent});
    }
  }
  inside = BracketProduct(w, 1.0, std::move(in));
  outside = BracketProduct(dim_ - w, constant_, std::move(out));
  return true;
}

// Per atom N0 = |p| and C0 = (sqrt2 max(1, |A|))^{|p|} from Peetre's inequality
// <u + v> <= sqrt2 <u><v> together with <Aw> <= max(1, |A|) <w>.
static OrderCertificate certify(const BracketProduct& e) {
  OrderCertificate c{1.0, 0.0};
  for (const auto& a : e.atoms()) {
    double norm = a.matrix.operatorNorm();
    double p = std::abs(a.exponent);
    c.n0 += p;
    c.c0 *= std::pow(std::sqrt(2.0) * std::max(1.0, norm), p);
  }
  c.n0 = std::max(c.n0, 1.0);
  return c;
}

OrderFunction::OrderFunction(BracketProduct expr, OrderDomain domain, int n)
    : expr_(std::move(expr)), domain_(domain), n_(n) {
  const int expected = domain == OrderDomain::E ? 2 * n : 4 * n;
  if (n < 1 || expr_.dim() != expected)
    throw DimensionError("order function of dimension " + std::to_string(expr_.dim()) +
                         " does not fit its domain (expected " + std::to_string(expected) + ")");
  if (!(expr_.constant() > 0.0) || !std::isfinite(expr_.constant()))
    throw InputError("order function constant must be positive and finite");
  cert_ = certify(expr_);
}

OrderFunction OrderFunction::constant(OrderDomain domain, int n, double c) {
  const int dim = domain == OrderDomain::E ? 2 * n : 4 * n;
  return OrderFunction(BracketProduct(dim, c, {}), domain, n);
}

OrderFunction OrderFunction::bracket(OrderDomain domain, int n, Mat a, Vec b, double p) {
  const int dim = static_cast<int>(a.cols());
  return OrderFunction(BracketProduct(dim, 1.0, {{std::move(a), std::move(b), p}}), domain, n);
}

OrderFunction OrderFunction::point_bracket(int n, double p) {
  return bracket(OrderDomain::E, n, Mat::Identity(2 * n, 2 * n), Vec::Zero(2 * n), p);
}

OrderFunction OrderFunction::position_bracket(int n, double p) {
  Mat a = Mat::Zero(2 * n, 4 * n);
  a.leftCols(2 * n).setIdentity();
  return bracket(OrderDomain::EE, n, a, Vec::Zero(2 * n), p);
}

OrderFunction OrderFunction::covector_bracket(int n, double p) {
  Mat a = Mat::Zero(2 * n, 4 * n);
  a.rightCols(2 * n).setIdentity();
  return bracket(OrderDomain::EE, n, a, Vec::Zero(2 * n), p);
}

OrderFunction OrderFunction::operator*(const OrderFunction& other) const {
  if (domain_ != other.domain_ || n_ != other.n_) throw DimensionError("order functions on different domains");
  return OrderFunction(expr_ * other.expr_, domain_, n_);
}

OrderFunction OrderFunction::scaled(double c) const {
  return OrderFunction(BracketProduct(dim(), expr_.constant() * c, expr_.atoms()), domain_, n_);
}

double OrderFunction::operator()(const Vec& rho) const {
  if (rho.size() != dim())
    throw DimensionError("point of length " + std::to_string(rho.size()) + " outside the order function domain");
  return expr_.eval(rho.data());
}

bool OrderFunction::depends_on_position() const {
  return domain_ == OrderDomain::E ? expr_.depends_on(0, dim()) : expr_.depends_on(0, 2 * n_);
}

bool OrderFunction::depends_on_covector() const {
  return domain_ == OrderDomain::EE && expr_.depends_on(2 * n_, 4 * n_);
}

// JSON expression trees: every node may carry "atom", "product" and "constant"; they multiply.
namespace {

struct Parsed {
  double constant = 1.0;
  std::vector<BracketAtom> atoms;
  int dim = -1;
};

void parse_node(const json& j, Parsed& out) {
  if (!j.is_object()) throw InputError("order function node must be a JSON object");
  bool any = false;
  if (j.contains("constant")) {
    any = true;
    if (!j["constant"].is_number()) throw InputError("constant must be a number");
    double c = j["constant"].get<double>();
    if (!(c > 0.0) || !std::isfinite(c))
      throw InputError("illegal constant " + j["constant"].dump() + ": order functions are strictly positive");
    out.constant *= c;
  }
  if (j.contains("atom")) {
    any = true;
    const json& a = j["atom"];
    if (!a.is_object() || !a.contains("exponent") || !a.contains("affine"))
      throw InputError("atom needs 'exponent' and 'affine'");
    const json& aff = a["affine"];
    if (!aff.contains("matrix") || !aff["matrix"].is_array() || aff["matrix"].empty())
      throw InputError("affine map needs a nonempty 'matrix'");
    const json& rows = aff["matrix"];
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows[0].size());
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
      if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != c)
        throw InputError("affine matrix rows must have equal length");
      for (int k = 0; k < c; ++k) m(i, k) = rows[i][k].get<double>();
    }
    Vec b = Vec::Zero(r);
    if (aff.contains("offset")) {
      const json& o = aff["offset"];
      if (!o.is_array() || static_cast<int>(o.size()) != r) throw InputError("offset length must equal matrix rows");
      for (int i = 0; i < r; ++i) b[i] = o[i].get<double>();
    }
    double p = a["exponent"].get<double>();
    if (!std::isfinite(p) || !m.allFinite() || !b.allFinite()) throw InputError("non-finite atom data");
    if (out.dim >= 0 && out.dim != c) throw InputError("atoms disagree on the domain dimension");
    out.dim = c;
    out.atoms.push_back({m, b, p});
  }
  if (j.contains("product")) {
    any = true;
    if (!j["product"].is_array()) throw InputError("'product' must be an array");
    for (const auto& child : j["product"]) parse_node(child, out);
  }
  if (!any) throw InputError("order function node has none of 'atom', 'product', 'constant'");
}

}  // namespace

OrderFunction OrderFunction::from_json(const json& j) {
  Parsed p;
  try {
    parse_node(j, p);
  } catch (const json::exception& e) {
    throw InputError(std::string("order function JSON: ") + e.what());
  }
  int n = j.value("n", 0);
  std::string dom = j.value("domain", std::string());
  OrderDomain domain;
  if (dom == "E")
    domain = OrderDomain::E;
  else if (dom == "ExE*" || dom == "E x E*")
    domain = OrderDomain::EE;
  else if (!dom.empty())
    throw InputError("unknown order function domain '" + dom + "'");
  else if (p.dim > 0)
    domain = (p.dim % 4 == 0 && (n == 0 || p.dim == 4 * n)) ? OrderDomain::EE : OrderDomain::E;
  else
    domain = OrderDomain::EE;
  if (n == 0) {
    if (p.dim < 0) throw InputError("a constant order function needs 'n' or 'domain' and 'n'");
    n = domain == OrderDomain::E ? p.dim / 2 : p.dim / 4;
  }
  const int dim = domain == OrderDomain::E ? 2 * n : 4 * n;
  if (p.dim >= 0 && p.dim != dim) throw InputError("atom dimension does not match the declared domain");
  return OrderFunction(BracketProduct(dim, p.constant, std::move(p.atoms)), domain, n);
}

OrderFunction OrderFunction::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return from_json(j);
}

json OrderFunction::to_json() const {
  json product = json::array();
  for (const auto& a : expr_.atoms()) {
    json rows = json::array();
    for (int r = 0; r < a.matrix.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < a.matrix.cols(); ++c) row.push_back(a.matrix(r, c));
      rows.push_back(row);
    }
    json off = json::array();
    for (int r = 0; r < a.offset.size(); ++r) off.push_back(a.offset[r]);
    product.push_back({{"atom", {{"exponent", a.exponent}, {"affine", {{"matrix", rows}, {"offset", off}}}}}});
  }
  return {{"domain", domain_ == OrderDomain::E ? "E" : "ExE*"},
          {"n", n_},
          {"constant", expr_.constant()},
          {"product", product}};
}

SweepResult certify_order_axiom(const OrderFunction& m, std::size_t samples, double radius,
                                std::uint64_t seed) {
  const int d = m.dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif;
  auto draw = [&]() {
    Vec v(d);
    for (int i = 0; i < d; ++i) v[i] = gauss(rng);
    double r = radius * std::pow(unif(rng), 1.0 / d);
    return Vec(v.normalized() * r);
  };
  const auto& cert = m.certificate();
  const double log_c0 = std::log(cert.c0);
  SweepResult res;
  res.samples = samples;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < samples; ++s) {
    Vec rho = draw();
    // Every fourth pair is a short hop, where the ratio is least slack.
    Vec mu = (s % 4 == 3) ? Vec(rho + draw() / radius) : draw();
    double lr = m.expression().log_eval(rho.data()) - m.expression().log_eval(mu.data()) -
                cert.n0 * std::log(bracket_norm(rho - mu));
    if (lr > worst) {
      worst = lr;
      res.worst_rho = rho;
      res.worst_mu = mu;
    }
  }
  res.max_ratio = std::exp(worst);
  res.passed = worst <= log_c0 + 1e-12;
  return res;
}

}  // namespace wsym
