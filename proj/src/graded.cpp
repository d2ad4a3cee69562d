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


#include "graded.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <Eigen/QR>

#include "qlp/error.hpp"

namespace qlp::detail {

WideReal graded_squared_singular_values(WideMatrix g) {
  const Eigen::Index d = g.cols();
  const long double tol = std::numeric_limits<long double>::epsilon() * static_cast<long double>(d);
  constexpr int kMaxSweeps = 80;
  bool rotated = true;
  for (int sweep = 0; sweep < kMaxSweeps && rotated; ++sweep) {
    rotated = false;
    for (Eigen::Index j = 0; j + 1 < d; ++j) {
      for (Eigen::Index k = j + 1; k < d; ++k) {
        const long double alpha = g.col(j).squaredNorm();
        const long double beta = g.col(k).squaredNorm();
        const Wide gamma = g.col(j).dot(g.col(k));
        const long double mag = std::abs(gamma);
        if (!(mag > tol * std::sqrt(alpha * beta))) continue;
        rotated = true;
        const long double zeta = (beta - alpha) / (2.0L * mag);
        const long double t =
            (zeta >= 0.0L ? 1.0L : -1.0L) / (std::abs(zeta) + std::sqrt(1.0L + zeta * zeta));
        const long double c = 1.0L / std::sqrt(1.0L + t * t);
        const long double sn = c * t;
        const WideVector gj = g.col(j);
        const WideVector hk = g.col(k) * (mag / gamma);
        g.col(j) = c * gj - sn * hk;
        g.col(k) = sn * gj + c * hk;
      }
    }
  }
  if (rotated) throw Error(ErrorKind::ConvergenceFailure, "one-sided Jacobi did not converge");
  WideReal out(d);
  for (Eigen::Index i = 0; i < d; ++i) out(i) = g.col(i).squaredNorm();
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

WideReal two_sided_squared_singular_values(const WideMatrix& g) {
  const Eigen::ColPivHouseholderQR<WideMatrix> qr(g);
  const WideMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  return graded_squared_singular_values(r.adjoint());
}

}  // namespace qlp::detail
