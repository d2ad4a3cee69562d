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


// Long double singular values that stay accurate relative to their own size
// for graded matrices. Internal to the library.

#ifndef QLP_SRC_GRADED_HPP
#define QLP_SRC_GRADED_HPP

#include <complex>

#include <Eigen/Core>

namespace qlp::detail {

using Wide = std::complex<long double>;
using WideMatrix = Eigen::Matrix<Wide, Eigen::Dynamic, Eigen::Dynamic>;
using WideVector = Eigen::Matrix<Wide, Eigen::Dynamic, 1>;
using WideReal = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

// Squared singular values of g, descending, by one-sided (Hestenes) Jacobi.
// Columns are rotated until every pair is orthogonal relative to the product
// of their own norms, so results stay accurate relative to their size when g
// is a well conditioned matrix times a column scaling of any spread. Two-sided
// solvers stop relative to the largest entry and lose the small values.
WideReal graded_squared_singular_values(WideMatrix g);

// Same, for g = D1 x D2 with both sides scaled. A column-pivoted QR moves the
// row grading of g into the columns of R*, where the one-sided sweep handles it.
WideReal two_sided_squared_singular_values(const WideMatrix& g);

}  // namespace qlp::detail

#endif  // QLP_SRC_GRADED_HPP
