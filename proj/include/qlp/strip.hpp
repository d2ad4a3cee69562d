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

#ifndef QLP_STRIP_HPP
#define QLP_STRIP_HPP

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qlp/family.hpp"
#include "qlp/schatten.hpp"
#include "qlp/weighted.hpp"

namespace qlp {

// Plain Schatten norms (the trace as reference weight).
struct TraceWeight {};
using NormWeight = std::variant<TraceWeight, WeightedContext>;

double weighted_or_plain_norm(const NormWeight& weight, const ComplexMatrix& x, PExponent p);

// Trapezoid rule on [-half_width, half_width] with the given step. The
// optional bound B must satisfy |log ||G(k + it)||| <= B for all real t; it
// feeds the analytic tail estimate outside the truncated range.
struct QuadratureSpec {
  double half_width = 8.0;
  double step = 1.0 / 64.0;
  std::optional<double> log_norm_bound;
};

struct BoundarySample {
  double t;
  double norm0;  // ||G(it)||_{p0}
  double norm1;  // ||G(1 + it)||_{p1}
};

struct BoundaryNormProfile {
  PExponent p0{1.0};
  PExponent p1{1.0};
  std::vector<BoundarySample> samples;
  double sup0 = 0.0;
  double sup1 = 0.0;
  // Sampled norms on each line agree to 1e-9 relative.
  bool t_invariant = false;
};

struct CertificateReport {
  double lhs = 0.0;    // interior value (a norm, or a log-norm for Hirschman)
  double rhs = 0.0;    // the bound
  double slack = 0.0;  // rhs - lhs
  // Three lines: slack / rhs. Hirschman and product-power: equal to slack,
  // which is already scale free.
  double relative_slack = 0.0;
  // True when the bound is a theorem check rather than a sampled estimate.
  bool sound = false;
  double quadrature_error = 0.0;
  double tail_bound = 0.0;
  bool tail_certified = false;
  std::optional<BoundaryNormProfile> profile;
};

// 33 points, uniform on [-4, 4].
std::vector<double> default_t_grid();

// Compares ||G(theta)||_{p_theta} with M0^{1-theta} M1^theta where M_k is the
// largest boundary norm found on t_grid. `sound` is set only when the family
// certifies t-independent boundary norms for the chosen weight, so the grid
// maximum equals the true supremum.
CertificateReport three_lines_check(const AnalyticFamily& fam, const NormWeight& weight,
                                    PExponent p0, PExponent p1, double theta,
                                    std::span<const double> t_grid);

// sin(pi theta) / (2 theta (cosh(pi t) + cos(pi theta))), a probability
// density in t for every theta in (0, 1).
double hirschman_kernel(double theta, double t);

// Upper bound on the kernel mass outside [-T, T], valid for T >= ln(4)/pi.
double hirschman_tail_mass(double theta, double half_width);

// Trapezoid estimate of the kernel mass inside [-T, T].
double hirschman_kernel_mass(double theta, const QuadratureSpec& quad);

// Sum of a span by recursive halving; fixed order, so reproducible.
double pairwise_sum(std::span<const double> values);

// log ||G(theta)||_{p_theta} against the kernel-weighted boundary average
//   int (1-theta) beta_{1-theta}(t) log||G(it)||_{p0}
//       + theta beta_theta(t) log||G(1+it)||_{p1} dt.
// Plain Schatten norms. Throws LogOfZero if a sampled boundary norm is below
// 1e-13.
CertificateReport hirschman_check(const AnalyticFamily& fam, PExponent p0, PExponent p1,
                                  double theta, const QuadratureSpec& quad = {});

// Boundary data of G(z) = prod_k A_k^z on the line Re z = 1, sampled on the
// quadrature nodes once so that many (r, p) pairs can be checked cheaply.
class ProductPowerProfile {
 public:
  ProductPowerProfile(std::vector<HermitianMatrix> factors, const QuadratureSpec& quad = {});

  // log || |prod A_k^r|^{1/r} ||_p against int beta_r(t) log||prod A_k^{1+it}||_p dt.
  CertificateReport check(double r, PExponent p) const;

  std::size_t size() const noexcept { return eigen_.size(); }

 private:
  std::vector<SpectralDecomposition> eigen_;
  QuadratureSpec quad_;
  std::vector<double> nodes_;
  std::vector<RealVector> node_singular_values_;  // of prod A_k^{1+it}
  RealVector product_singular_values_;             // of prod A_k
  double log_det_ = 0.0;                           // sum_k log det A_k
};

CertificateReport product_power_check(const std::vector<HermitianMatrix>& factors, double r,
                                      PExponent p, const QuadratureSpec& quad = {});

}  // namespace qlp

#endif  // QLP_STRIP_HPP
