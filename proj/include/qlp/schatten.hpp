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

#ifndef QLP_SCHATTEN_HPP
#define QLP_SCHATTEN_HPP

#include <limits>
#include <string>

#include "qlp/spectral.hpp"

namespace qlp {

// Index p in (0, inf]. Infinity is a distinguished value, not a large number.
class PExponent {
 public:
  // Throws InvalidExponent unless p > 0 (p may be +inf).
  explicit PExponent(double p);

  static PExponent infinity() { return PExponent(std::numeric_limits<double>::infinity()); }

  bool is_infinite() const noexcept { return value_ == std::numeric_limits<double>::infinity(); }
  double value() const noexcept { return value_; }
  // 1/p with 1/inf = 0.
  double reciprocal() const noexcept { return is_infinite() ? 0.0 : 1.0 / value_; }

  static PExponent from_reciprocal(double inv);

  std::string to_string() const;

  friend bool operator==(PExponent a, PExponent b) { return a.value_ == b.value_; }
  friend bool operator<(PExponent a, PExponent b) { return a.value_ < b.value_; }

 private:
  double value_;
};

// (sum_i s_i^p)^{1/p} over the singular values, the largest singular value for
// p = inf. A quasi-norm when p < 1.
double schatten_norm(const ComplexMatrix& x, PExponent p);

// Same, from precomputed descending singular values.
double schatten_norm_from_singular_values(const RealVector& s, PExponent p);

// 1/p_theta = (1 - theta)/p0 + theta/p1.
PExponent p_theta(PExponent p0, PExponent p1, double theta);

struct Factorization {
  ComplexMatrix g;
  ComplexMatrix h;
};

// Riesz factorization of a constant family: with f = u|f|, returns
// g = u|f|^{1-lambda}, h = |f|^lambda, so f = gh and for every r > 0
// ||g||_{r/(1-lambda)} = ||f||_r^{1-lambda}, ||h||_{r/lambda} = ||f||_r^lambda.
Factorization factorize(const ComplexMatrix& f, double lambda);

// Left and right sides of a norm inequality lhs <= rhs (or identity lhs = rhs).
struct NormComparison {
  double lhs = 0.0;
  double rhs = 0.0;

  // max(0, lhs - rhs) / rhs, with a floor on the denominator.
  double relative_violation() const;
  // |lhs - rhs| / max(|lhs|, |rhs|), with a floor on the denominator.
  double relative_defect() const;
};

// ||xy||_r against ||x||_p ||y||_q, 1/r = 1/p + 1/q.
NormComparison holder(const ComplexMatrix& x, const ComplexMatrix& y, PExponent p, PExponent q);
// ||x+y||_p^p against ||x||_p^p + ||y||_p^p; requires p < 1.
NormComparison quasi_triangle(const ComplexMatrix& x, const ComplexMatrix& y, PExponent p);
// ||x+y||_p against ||x||_p + ||y||_p; requires p >= 1.
NormComparison triangle(const ComplexMatrix& x, const ComplexMatrix& y, PExponent p);
// ||x||_{2p}^2 against ||x*x||_p; the same holds for xx*.
NormComparison two_p_identity(const ComplexMatrix& x, PExponent p, bool left = true);

}  // namespace qlp

#endif  // QLP_SCHATTEN_HPP
