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
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qlp/random.hpp"
#include "support.hpp"

namespace qlp {
namespace {

using testing::diag;
using testing::rel_diff;
using testing::throws_kind;

const double kInf = std::numeric_limits<double>::infinity();

PExponent P(double p) { return PExponent(p); }

TEST(PExponent, RejectsNonPositiveAndNaN) {
  for (double bad : {0.0, -1.0, std::numeric_limits<double>::quiet_NaN(), -kInf}) {
    EXPECT_TRUE(throws_kind([&] { PExponent p(bad); }, ErrorKind::InvalidExponent)) << bad;
  }
}

TEST(PExponent, InfinityIsDistinguished) {
  const PExponent inf = PExponent::infinity();
  EXPECT_TRUE(inf.is_infinite());
  EXPECT_EQ(inf.reciprocal(), 0.0);
  EXPECT_EQ(PExponent::from_reciprocal(0.0), inf);
  EXPECT_EQ(inf.to_string(), "inf");
  EXPECT_FALSE(P(1e300).is_infinite());
  EXPECT_EQ(PExponent::from_reciprocal(4.0).value(), 0.25);
}

TEST(SchattenNorm, DiagonalExamples) {
  EXPECT_DOUBLE_EQ(schatten_norm(diag({3.0, 4.0}), P(1.0)), 7.0);
  EXPECT_DOUBLE_EQ(schatten_norm(diag({1.0, 1.0}), P(0.5)), 4.0);
  EXPECT_DOUBLE_EQ(schatten_norm(diag({3.0, 4.0}), P(2.0)), 5.0);
  EXPECT_DOUBLE_EQ(schatten_norm(diag({3.0, 4.0}), PExponent::infinity()), 4.0);
}

TEST(SchattenNorm, ZeroMatrixHasZeroNorm) {
  for (double p : {0.1, 1.0, 3.0, kInf}) {
    EXPECT_EQ(schatten_norm(ComplexMatrix::Zero(3, 3), P(p)), 0.0);
  }
}

TEST(SchattenNorm, NoiseBelowRelativeCutoffIsDropped) {
  // s^{0.1} would turn 1e-300 into 1e-30 and then blow up the 1/p power.
  EXPECT_DOUBLE_EQ(schatten_norm(diag({1.0, 1e-300}), P(0.1)), 1.0);
  EXPECT_GT(schatten_norm(diag({1.0, 1e-12}), P(0.1)), 1.0);
}

TEST(SchattenNorm, MatchesOracleOnRandomMatrices) {
  RandomStream rng(201);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix x = ginibre(5, rng);
    EXPECT_LE(rel_diff(schatten_norm(x, P(0.7)), oracle::schatten(x, 0.7)), 1e-10);
    for (double p : {0.25, 1.0, 2.0, 4.0, kInf}) {
      EXPECT_LE(rel_diff(schatten_norm(x, P(p)), oracle::schatten(x, p)), 1e-10) << p;
    }
  }
}

TEST(PTheta, Examples) {
  EXPECT_DOUBLE_EQ(p_theta(P(1.0), PExponent::infinity(), 0.5).value(), 2.0);
  EXPECT_DOUBLE_EQ(p_theta(P(0.3), P(4.0), 0.0).value(), 0.3);
  EXPECT_NEAR(p_theta(P(0.5), P(2.0), 1.0 / 3.0).value(), 2.0 / 3.0, 1e-15);
  EXPECT_TRUE(p_theta(P(1.0), PExponent::infinity(), 1.0).is_infinite());
  EXPECT_TRUE(throws_kind([] { p_theta(P(1.0), P(2.0), 1.5); }, ErrorKind::InvalidArgument));
}

TEST(Factorize, PositiveInputSplitsIntoSquareRoots) {
  RandomStream rng(202);
  const HermitianMatrix a = testing::random_faithful_psd(4, rng);
  const Factorization f = factorize(a.matrix(), 0.5);
  const ComplexMatrix root = oracle::power(a.matrix(), 0.5);
  EXPECT_LE(oracle::max_abs(f.g - root), 1e-10 * oracle::max_abs(root));
  EXPECT_LE(oracle::max_abs(f.h - root), 1e-10 * oracle::max_abs(root));
}

TEST(Factorize, UnitaryInput) {
  RandomStream rng(203);
  const ComplexMatrix v = haar_unitary(4, rng);
  const Factorization f = factorize(v, 0.37);
  EXPECT_LE(oracle::max_abs(f.g - v), 1e-12);
  EXPECT_LE(oracle::max_abs(f.h - ComplexMatrix::Identity(4, 4)), 1e-12);
}

TEST(Factorize, ExactNormSplitting) {
  RandomStream rng(204);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix x = ginibre(4, rng);
    const double lambda = 0.3;
    const Factorization f = factorize(x, lambda);
    EXPECT_LE(oracle::max_abs(f.g * f.h - x), 1e-10 * operator_norm(x));
    for (double r : {0.8, 0.5, 1.0, 3.0}) {
      const double fr = oracle::schatten(x, r);
      EXPECT_LE(rel_diff(schatten_norm(f.g, P(r / (1.0 - lambda))), std::pow(fr, 1.0 - lambda)),
                1e-9);
      EXPECT_LE(rel_diff(schatten_norm(f.h, P(r / lambda)), std::pow(fr, lambda)), 1e-9);
    }
  }
}

TEST(Factorize, RejectsLambdaOutsideOpenInterval) {
  EXPECT_TRUE(throws_kind([] { factorize(diag({1.0, 2.0}), 0.0); }, ErrorKind::InvalidArgument));
  EXPECT_TRUE(throws_kind([] { factorize(diag({1.0, 2.0}), 1.0); }, ErrorKind::InvalidArgument));
}

// Draws a matrix that is sometimes rank deficient and sometimes badly scaled.
ComplexMatrix draw(Eigen::Index d, RandomStream& rng) {
  switch (rng.index(3)) {
    case 0: {
      const Eigen::Index r = 1 + static_cast<Eigen::Index>(rng.index(static_cast<std::size_t>(d)));
      return ginibre(d, r, rng) * ginibre(r, d, rng);
    }
    case 1:
      return ginibre(d, rng) * std::exp(3.0 * rng.normal());
    default:
      return ginibre(d, rng);
  }
}

const std::vector<double> kGrid = {0.25, 0.5, 0.9, 1.0, 2.0, 4.0, kInf};

TEST(SchattenProperties, Holder) {
  RandomStream rng(205);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.index(5));
    const ComplexMatrix x = draw(d, rng);
    const ComplexMatrix y = draw(d, rng);
    const PExponent p = P(kGrid[rng.index(kGrid.size())]);
    const PExponent q = P(kGrid[rng.index(kGrid.size())]);
    EXPECT_LE(holder(x, y, p, q).relative_violation(), 1e-9);
  }
}

TEST(SchattenProperties, QuasiTriangleBelowOne) {
  RandomStream rng(206);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.index(5));
    const ComplexMatrix x = draw(d, rng);
    const ComplexMatrix y = draw(d, rng);
    for (double p : {0.25, 0.5, 0.9}) {
      EXPECT_LE(quasi_triangle(x, y, P(p)).relative_violation(), 1e-9);
    }
  }
  EXPECT_TRUE(throws_kind([] { quasi_triangle(diag({1.0}), diag({1.0}), P(1.0)); },
                          ErrorKind::InvalidExponent));
}

TEST(SchattenProperties, TriangleFromOne) {
  RandomStream rng(207);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.index(5));
    const ComplexMatrix x = draw(d, rng);
    const ComplexMatrix y = draw(d, rng);
    for (double p : {1.0, 2.0, kInf}) {
      EXPECT_LE(triangle(x, y, P(p)).relative_violation(), 1e-9);
    }
  }
  EXPECT_TRUE(throws_kind([] { triangle(diag({1.0}), diag({1.0}), P(0.5)); },
                          ErrorKind::InvalidExponent));
}

TEST(SchattenProperties, TwoPIdentityBothSides) {
  RandomStream rng(208);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.index(5));
    const ComplexMatrix x = draw(d, rng);
    const PExponent p = P(kGrid[rng.index(kGrid.size())]);
    EXPECT_LE(two_p_identity(x, p, true).relative_defect(), 1e-9);
    EXPECT_LE(two_p_identity(x, p, false).relative_defect(), 1e-9);
  }
}

TEST(SchattenProperties, Homogeneity) {
  RandomStream rng(209);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexMatrix x = ginibre(4, rng);
    const Complex c(3.0 * rng.normal(), 3.0 * rng.normal());
    const PExponent p = P(kGrid[rng.index(kGrid.size())]);
    EXPECT_LE(rel_diff(schatten_norm(c * x, p), std::abs(c) * schatten_norm(x, p)), 1e-12);
  }
}

TEST(SchattenProperties, UnitaryInvariance) {
  RandomStream rng(210);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.index(5));
    const ComplexMatrix x = ginibre(d, rng);
    const ComplexMatrix u = haar_unitary(d, rng);
    const ComplexMatrix v = haar_unitary(d, rng);
    const PExponent p = P(kGrid[rng.index(kGrid.size())]);
    EXPECT_LE(rel_diff(schatten_norm(u * x * v, p), schatten_norm(x, p)), 1e-10);
  }
}

TEST(SchattenProperties, NormIsMonotoneDecreasingInP) {
  RandomStream rng(211);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix x = draw(4, rng);
    double prev = kInf;
    for (double p : kGrid) {
      const double n = schatten_norm(x, P(p));
      EXPECT_LE(n, prev * (1.0 + 1e-12));
      prev = n;
    }
  }
}

}  // namespace
}  // namespace qlp
