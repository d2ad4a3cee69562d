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

#include "qlp/schatten.hpp"

#include <cmath>
#include <sstream>

#include "qlp/error.hpp"

namespace qlp {

namespace {

constexpr double kTiny = std::numeric_limits<double>::min();

}  // namespace

PExponent::PExponent(double p) : value_(p) {
  if (!(p > 0.0)) {
    throw Error(ErrorKind::InvalidExponent,
                "exponent must lie in (0, inf], got " + std::to_string(p));
  }
}

PExponent PExponent::from_reciprocal(double inv) {
  if (inv == 0.0) return infinity();
  return PExponent(1.0 / inv);
}

std::string PExponent::to_string() const {
  if (is_infinite()) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << value_;
  return os.str();
}

double schatten_norm_from_singular_values(const RealVector& s, PExponent p) {
  if (s.size() == 0) return 0.0;
  const double top = s(0);
  if (top <= 0.0) return 0.0;
  if (p.is_infinite()) return top;
  const double cutoff = tol::kRelativeZero * top;
  const double pv = p.value();
  // Factor out the top singular value to keep s^p in range.
  double sum = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cutoff) sum += std::pow(s(i) / top, pv);
  }
  return top * std::pow(sum, 1.0 / pv);
}

double schatten_norm(const ComplexMatrix& x, PExponent p) {
  return schatten_norm_from_singular_values(singular_values(x), p);
}

PExponent p_theta(PExponent p0, PExponent p1, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "theta must lie in [0, 1], got " + std::to_string(theta));
  }
  if (theta == 0.0) return p0;
  if (theta == 1.0) return p1;
  return PExponent::from_reciprocal((1.0 - theta) * p0.reciprocal() +
                                    theta * p1.reciprocal());
}

Factorization factorize(const ComplexMatrix& f, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "lambda must lie in (0, 1), got " + std::to_string(lambda));
  }
  const PolarDecomposition pd = polar(f);
  const SpectralDecomposition eig = hermitian_eigen(pd.absx);
  return {pd.u * matrix_power(eig, 1.0 - lambda), matrix_power(eig, lambda)};
}

double NormComparison::relative_violation() const {
  return std::max(0.0, lhs - rhs) / std::max(std::abs(rhs), kTiny);
}

double NormComparison::relative_defect() const {
  return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), kTiny});
}

NormComparison holder(const ComplexMatrix& x, const ComplexMatrix& y, PExponent p,
                      PExponent q) {
  const PExponent r = PExponent::from_reciprocal(p.reciprocal() + q.reciprocal());
  return {schatten_norm(x * y, r), schatten_norm(x, p) * schatten_norm(y, q)};
}

NormComparison quasi_triangle(const ComplexMatrix& x, const ComplexMatrix& y, PExponent p) {
  if (!(p.value() < 1.0)) {
    throw Error(ErrorKind::InvalidExponent, "quasi-triangle check needs p < 1");
  }
  const double pv = p.value();
  return {std::pow(schatten_norm(x + y, p), pv),
          std::pow(schatten_norm(x, p), pv) + std::pow(schatten_norm(y, p), pv)};
}

NormComparison triangle(const ComplexMatrix& x, const ComplexMatrix& y, PExponent p) {
  if (p.value() < 1.0) {
    throw Error(ErrorKind::InvalidExponent, "triangle check needs p >= 1");
  }
  return {schatten_norm(x + y, p), schatten_norm(x, p) + schatten_norm(y, p)};
}

NormComparison two_p_identity(const ComplexMatrix& x, PExponent p, bool left) {
  const PExponent two_p = PExponent(2.0 * p.value());
  const double n = schatten_norm(x, two_p);
  const ComplexMatrix gram = left ? ComplexMatrix(x.adjoint() * x)
                                   : ComplexMatrix(x * x.adjoint());
  return {n * n, schatten_norm(gram, p)};
}

}  // namespace qlp
