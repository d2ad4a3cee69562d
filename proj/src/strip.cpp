// Copyright 2026 The qlp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlp/strip.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qlp/error.hpp"

namespace qlp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogFloor = 1e-13;
constexpr double kInvariance = 1e-9;

void require_open_unit(double theta, const char* name) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(name) + " must lie in (0, 1), got " + std::to_string(theta));
  }
}

struct Grid {
  std::vector<double> t;
  double step;
};

Grid quadrature_nodes(const QuadratureSpec& quad) {
  if (!(quad.step > 0.0) || !(quad.half_width > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "quadrature step and range must be positive");
  }
  // The exponential tail estimate needs cosh(pi T) >= 2.
  if (quad.half_width < std::log(4.0) / kPi) {
    throw Error(ErrorKind::InvalidArgument, "quadrature half-width must be at least ln(4)/pi");
  }
  const double intervals = 2.0 * quad.half_width / quad.step;
  auto n = static_cast<long>(std::llround(intervals));
  if (std::abs(intervals - static_cast<double>(n)) > 1e-9 * intervals || n < 2) {
    throw Error(ErrorKind::InvalidArgument, "quadrature step must divide the range");
  }
  if (n % 2 != 0) ++n;  // even, for the coarse comparison rule
  const double h = 2.0 * quad.half_width / static_cast<double>(n);
  Grid g{std::vector<double>(static_cast<std::size_t>(n) + 1), h};
  for (long j = 0; j <= n; ++j) g.t[j] = -quad.half_width + static_cast<double>(j) * h;
  g.t[n / 2] = 0.0;
  return g;
}

struct Trapezoid {
  double value;
  double error;  // |fine - coarse|
};

Trapezoid trapezoid(const std::vector<double>& f, double h) {
  const std::size_t n = f.size() - 1;
  std::vector<double> fine(f);
  fine.front() *= 0.5;
  fine.back() *= 0.5;
  std::vector<double> coarse;
  coarse.reserve(n / 2 + 1);
  for (std::size_t j = 0; j <= n; j += 2) coarse.push_back(f[j]);
  coarse.front() *= 0.5;
  coarse.back() *= 0.5;
  const double i_fine = h * pairwise_sum(fine);
  const double i_coarse = 2.0 * h * pairwise_sum(coarse);
  return {i_fine, std::abs(i_fine - i_coarse)};
}

double checked_log(double norm, const char* where) {
  if (!(norm >= kLogFloor)) {
    throw Error(ErrorKind::LogOfZero, std::string(where) + " norm " + std::to_string(norm) +
                                          " is below the log floor");
  }
  return std::log(norm);
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

double weighted_or_plain_norm(const NormWeight& weight, const ComplexMatrix& x, PExponent p) {
  if (const auto* ctx = std::get_if<WeightedContext>(&weight)) return weighted_norm(*ctx, x, p);
  return schatten_norm(x, p);
}

std::vector<double> default_t_grid() {
  std::vector<double> grid(33);
  for (int j = 0; j < 33; ++j) grid[j] = -4.0 + 0.25 * j;
  return grid;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

CertificateReport three_lines_check(const AnalyticFamily& fam, const NormWeight& weight,
                                    PExponent p0, PExponent p1, double theta,
                                    std::span<const double> t_grid) {
  require_open_unit(theta, "theta");
  if (t_grid.empty()) throw Error(ErrorKind::InvalidArgument, "t_grid is empty");
  for (double t : t_grid) {
    const bool mirrored = std::any_of(t_grid.begin(), t_grid.end(),
                                      [t](double s) { return std::abs(s + t) <= 1e-12; });
    if (!mirrored) throw Error(ErrorKind::InvalidArgument, "t_grid is not symmetric about 0");
  }
  if (const auto* ctx = std::get_if<WeightedContext>(&weight); ctx && ctx->dim() != fam.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "family and state dimensions differ");
  }

  const PExponent pt = p_theta(p0, p1, theta);
  CertificateReport rep;
  rep.lhs = weighted_or_plain_norm(weight, fam.evaluate(theta), pt);

  BoundaryNormProfile prof;
  prof.p0 = p0;
  prof.p1 = p1;
  double min0 = std::numeric_limits<double>::infinity();
  double min1 = min0;
  for (double t : t_grid) {
    BoundarySample s{t, weighted_or_plain_norm(weight, fam.evaluate({0.0, t}), p0),
                     weighted_or_plain_norm(weight, fam.evaluate({1.0, t}), p1)};
    prof.sup0 = std::max(prof.sup0, s.norm0);
    prof.sup1 = std::max(prof.sup1, s.norm1);
    min0 = std::min(min0, s.norm0);
    min1 = std::min(min1, s.norm1);
    prof.samples.push_back(s);
  }
  prof.t_invariant = prof.sup0 - min0 <= kInvariance * prof.sup0 &&
                     prof.sup1 - min1 <= kInvariance * prof.sup1;

  rep.rhs = std::pow(prof.sup0, 1.0 - theta) * std::pow(prof.sup1, theta);
  rep.slack = rep.rhs - rep.lhs;
  rep.relative_slack = rep.slack / std::max(rep.rhs, std::numeric_limits<double>::min());
  const BoundaryBehavior behavior = fam.boundary_behavior();
  rep.sound = std::holds_alternative<WeightedContext>(weight)
                  ? behavior == BoundaryBehavior::Fixed
                  : behavior != BoundaryBehavior::Varying;
  rep.profile = std::move(prof);
  return rep;
}

double hirschman_kernel(double theta, double t) {
  require_open_unit(theta, "theta");
  return std::sin(kPi * theta) /
         (2.0 * theta * (std::cosh(kPi * t) + std::cos(kPi * theta)));
}

double hirschman_tail_mass(double theta, double half_width) {
  require_open_unit(theta, "theta");
  // For |t| >= ln(4)/pi, cosh(pi t) + cos(pi theta) >= e^{pi |t|}/4, hence
  // beta_theta(t) <= C e^{-pi |t|} with C = 2 sin(pi theta) / theta.
  const double c = 2.0 * std::sin(kPi * theta) / theta;
  return 2.0 * c * std::exp(-kPi * half_width) / kPi;
}

double hirschman_kernel_mass(double theta, const QuadratureSpec& quad) {
  const Grid g = quadrature_nodes(quad);
  std::vector<double> f(g.t.size());
  for (std::size_t j = 0; j < f.size(); ++j) f[j] = hirschman_kernel(theta, g.t[j]);
  return trapezoid(f, g.step).value;
}

CertificateReport hirschman_check(const AnalyticFamily& fam, PExponent p0, PExponent p1,
                                  double theta, const QuadratureSpec& quad) {
  require_open_unit(theta, "theta");
  const Grid g = quadrature_nodes(quad);
  const PExponent pt = p_theta(p0, p1, theta);

  std::vector<double> f(g.t.size());
  std::vector<double> logs;
  logs.reserve(2 * g.t.size());
  for (std::size_t j = 0; j < g.t.size(); ++j) {
    const double t = g.t[j];
    const double l0 = checked_log(schatten_norm(fam.evaluate({0.0, t}), p0), "boundary Re z = 0");
    const double l1 = checked_log(schatten_norm(fam.evaluate({1.0, t}), p1), "boundary Re z = 1");
    logs.push_back(l0);
    logs.push_back(l1);
    f[j] = (1.0 - theta) * hirschman_kernel(1.0 - theta, t) * l0 +
           theta * hirschman_kernel(theta, t) * l1;
  }
  const Trapezoid integral = trapezoid(f, g.step);

  CertificateReport rep;
  rep.lhs = std::log(schatten_norm(fam.evaluate(theta), pt));
  rep.rhs = integral.value;
  rep.slack = rep.rhs - rep.lhs;
  rep.relative_slack = rep.slack;
  rep.quadrature_error = integral.error;

  // On certified t-invariant families the sampled maximum is the uniform bound.
  rep.tail_certified =
      quad.log_norm_bound.has_value() || fam.boundary_behavior() != BoundaryBehavior::Varying;
  const double bound = quad.log_norm_bound.value_or(max_abs(logs));
  rep.tail_bound = bound * ((1.0 - theta) * hirschman_tail_mass(1.0 - theta, quad.half_width) +
                            theta * hirschman_tail_mass(theta, quad.half_width));
  rep.sound = rep.tail_certified;
  return rep;
}

ProductPowerProfile::ProductPowerProfile(std::vector<HermitianMatrix> factors,
                                         const QuadratureSpec& quad)
    : quad_(quad) {
  if (factors.empty()) {
    throw Error(ErrorKind::InvalidArgument, "product needs at least one factor");
  }
  const Eigen::Index d = factors.front().dim();
  for (const auto& a : factors) {
    if (a.dim() != d) throw Error(ErrorKind::DimensionMismatch, "factors differ in dimension");
    SpectralDecomposition eig = hermitian_eigen(a);
    if (eig.eigenvalues(d - 1) < tol::kFaithful) {
      throw Error(ErrorKind::SingularPower,
                  "imaginary powers need faithful factors (smallest eigenvalue " +
                      std::to_string(eig.eigenvalues(d - 1)) + ")");
    }
    log_det_ += eig.eigenvalues.array().log().sum();
    eigen_.push_back(std::move(eig));
  }

  auto product_at = [this](Complex z) {
    ComplexMatrix acc = matrix_power(eigen_.front(), z);
    for (std::size_t k = 1; k < eigen_.size(); ++k) acc = acc * matrix_power(eigen_[k], z);
    return acc;
  };

  product_singular_values_ = singular_values(product_at(1.0));
  const Grid g = quadrature_nodes(quad_);
  nodes_ = g.t;
  node_singular_values_.reserve(nodes_.size());
  for (double t : nodes_) node_singular_values_.push_back(singular_values(product_at({1.0, t})));
}

CertificateReport ProductPowerProfile::check(double r, PExponent p) const {
  if (!(r > 0.0 && r <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "r must lie in (0, 1]");
  }
  const Eigen::Index d = eigen_.front().dim();

  // || |X|^{1/r} ||_p = ||X||_{p/r}^{1/r} for X = prod A_k^r.
  ComplexMatrix x = matrix_power(eigen_.front(), r);
  for (std::size_t k = 1; k < eigen_.size(); ++k) x = x * matrix_power(eigen_[k], r);
  const PExponent p_over_r = p.is_infinite() ? p : PExponent(p.value() / r);
  CertificateReport rep;
  rep.lhs = checked_log(schatten_norm(x, p_over_r), "interior") / r;
  rep.sound = true;
  rep.tail_certified = true;

  if (r == 1.0) {
    // beta_r concentrates at t = 0 as r -> 1.
    rep.rhs = checked_log(schatten_norm_from_singular_values(product_singular_values_, p),
                          "boundary");
  } else {
    std::vector<double> f(nodes_.size());
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
      f[j] = hirschman_kernel(r, nodes_[j]) *
             checked_log(schatten_norm_from_singular_values(node_singular_values_[j], p),
                         "boundary");
    }
    const double h = nodes_[1] - nodes_[0];
    const Trapezoid integral = trapezoid(f, h);
    rep.rhs = integral.value;
    rep.quadrature_error = integral.error;

    // |log ||prod A_k^{1+it}||_p| <= B uniformly in t:
    //   upper: Hoelder, ||prod X_k||_p <= prod ||A_k||_{np};
    //   lower: AM-GM on singular values, ||X||_p >= d^{1/p} |det X|^{1/d}.
    const double n = static_cast<double>(eigen_.size());
    const PExponent np = p.is_infinite() ? p : PExponent(n * p.value());
    double log_upper = 0.0;
    for (const auto& eig : eigen_) {
      log_upper += std::log(schatten_norm_from_singular_values(eig.eigenvalues, np));
    }
    const double dd = static_cast<double>(d);
    const double log_lower = log_det_ / dd + p.reciprocal() * std::log(dd);
    const double bound = std::max(std::abs(log_upper), std::abs(log_lower));
    rep.tail_bound = bound * hirschman_tail_mass(r, quad_.half_width);
  }
  rep.slack = rep.rhs - rep.lhs;
  rep.relative_slack = rep.slack;
  return rep;
}

CertificateReport product_power_check(const std::vector<HermitianMatrix>& factors, double r,
                                      PExponent p, const QuadratureSpec& quad) {
  return ProductPowerProfile(factors, quad).check(r, p);
}

}  // namespace qlp
