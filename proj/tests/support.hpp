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

#ifndef QLP_TESTS_SUPPORT_HPP
#define QLP_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "qlp/error.hpp"
#include "qlp/random.hpp"
#include "qlp/spectral.hpp"

namespace qlp::testing {

// Runs f and reports whether it threw qlp::Error of the given kind.
template <typename F>
::testing::AssertionResult throws_kind(F&& f, ErrorKind kind) {
  try {
    f();
  } catch (const Error& e) {
    if (e.kind() == kind) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure()
           << "threw " << to_string(e.kind()) << " (" << e.what() << "), expected "
           << to_string(kind);
  } catch (const std::exception& e) {
    return ::testing::AssertionFailure() << "threw a foreign exception: " << e.what();
  }
  return ::testing::AssertionFailure() << "did not throw, expected " << to_string(kind);
}

inline double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

inline double uniform(RandomStream& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.uniform();
}

inline ComplexMatrix random_hermitian(Eigen::Index d, RandomStream& rng) {
  const ComplexMatrix g = ginibre(d, rng);
  return 0.5 * (g + g.adjoint());
}

// Faithful positive matrix with eigenvalues well above the floor.
inline HermitianMatrix random_faithful_psd(Eigen::Index d, RandomStream& rng) {
  const ComplexMatrix g = ginibre(d, rng);
  return HermitianMatrix(ComplexMatrix(g * g.adjoint() + 0.1 * ComplexMatrix::Identity(d, d)));
}

inline ComplexMatrix diag(std::initializer_list<double> entries) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(entries.size()),
                                        static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (double e : entries) {
    m(i, i) = e;
    ++i;
  }
  return m;
}

}  // namespace qlp::testing

#endif  // QLP_TESTS_SUPPORT_HPP
