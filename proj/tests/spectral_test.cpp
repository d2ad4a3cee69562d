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

#include "qlp/spectral.hpp"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qlp/random.hpp"
#include "support.hpp"

namespace qlp {
namespace {

using testing::diag;
using testing::throws_kind;

TEST(HermitianMatrix, RejectsNonHermitianInput) {
  ComplexMatrix m(2, 2);
  m << 1.0, 2.0, 0.0, 1.0;
  EXPECT_TRUE(throws_kind([&] { HermitianMatrix h(m); }, ErrorKind::NonHermitian));
}

TEST(HermitianMatrix, StoresExactHermitianPart) {
  ComplexMatrix m(2, 2);
  m << 1.0, Complex(2.0, 1.0), Complex(2.0, -1.0 + 1e-14), 3.0;
  const HermitianMatrix h(m);
  EXPECT_EQ(h.matrix(), h.matrix().adjoint());
}

TEST(HermitianMatrix, RejectsNonFiniteAndNonSquare) {
  ComplexMatrix nan = ComplexMatrix::Identity(2, 2);
  nan(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_TRUE(throws_kind([&] { HermitianMatrix h(nan); }, ErrorKind::InvalidArgument));
  EXPECT_TRUE(throws_kind([&] { HermitianMatrix h(ComplexMatrix::Zero(2, 3)); },
                          ErrorKind::DimensionMismatch));
}

TEST(HermitianEigen, DiagonalInputIsSortedDescending) {
  const SpectralDecomposition e = hermitian_eigen(HermitianMatrix(diag({3.0, 4.0})));
  EXPECT_DOUBLE_EQ(e.eigenvalues(0), 4.0);
  EXPECT_DOUBLE_EQ(e.eigenvalues(1), 3.0);
  // The unitary is a permutation up to phases.
  EXPECT_NEAR(std::abs(e.unitary(1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(e.unitary(0, 1)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(e.unitary(0, 0)), 0.0, 1e-15);
}

TEST(HermitianEigen, IdentityHasUnitEigenvalues) {
  const SpectralDecomposition e = hermitian_eigen(HermitianMatrix::identity(3));
  for (Eigen::Index i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(e.eigenvalues(i), 1.0);
}

TEST(HermitianEigen, RandomInputsReassembleAndMatchOracle) {
  RandomStream rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix a = testing::random_hermitian(4, rng);
    const SpectralDecomposition e = hermitian_eigen(HermitianMatrix(a));
    const double scale = operator_norm(a);
    EXPECT_LE(oracle::max_abs(e.reassemble() - a), 1e-10 * scale);
    EXPECT_LE(oracle::max_abs(e.unitary * e.unitary.adjoint() - ComplexMatrix::Identity(4, 4)),
              1e-10);
    const auto ref = oracle::eigenvalues(a);
    for (Eigen::Index i = 0; i < 4; ++i) {
      EXPECT_NEAR(e.eigenvalues(i), static_cast<double>(ref[static_cast<std::size_t>(i)]),
                  1e-12 * scale);
      if (i > 0) {
        EXPECT_GE(e.eigenvalues(i - 1), e.eigenvalues(i));
      }
    }
  }
}

TEST(MatrixPower, IdentityToComplexPowerIsIdentity) {
  const ComplexMatrix r = matrix_power(HermitianMatrix::identity(2), Complex(0.5, 2.0));
  EXPECT_LE(oracle::max_abs(r - ComplexMatrix::Identity(2, 2)), 1e-15);
}

TEST(MatrixPower, SquareRootOfDiagonal) {
  const ComplexMatrix r = matrix_power(HermitianMatrix(diag({4.0, 9.0})), 0.5);
  EXPECT_LE(oracle::max_abs(r - diag({2.0, 3.0})), 1e-15);
}

TEST(MatrixPower, ImaginaryPowerIsUnitaryOnSupport) {
  RandomStream rng(102);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianMatrix a = random_psd(4, rng, 2);
    const double t = 3.0 * rng.normal();
    const ComplexMatrix u = matrix_power(a, Complex(0.0, t));
    // Support projection by thresholding the oracle spectrum.
    const oracle::Spectrum s = oracle::jacobi_eigen(oracle::widen(a.matrix()));
    oracle::WideMatrix p = oracle::WideMatrix::Zero(4, 4);
    for (Eigen::Index k = 0; k < 4; ++k) {
      if (s.values[static_cast<std::size_t>(k)] >= 1e-10L) {
        p += s.vectors.col(k) * s.vectors.col(k).adjoint();
      }
    }
    EXPECT_LE(oracle::max_abs(u * u.adjoint() - oracle::narrow(p)), 1e-10);
  }
}

TEST(MatrixPower, ZeroEigenvalueConventions) {
  const HermitianMatrix a(diag({2.0, 0.0}));
  EXPECT_LE(oracle::max_abs(matrix_power(a, 0.0) - ComplexMatrix::Identity(2, 2)), 0.0);
  EXPECT_LE(oracle::max_abs(matrix_power(a, Complex(0.5, 1.0)) -
                            diag({0.0, 0.0}) -
                            std::exp(Complex(0.5, 1.0) * std::log(2.0)) * diag({1.0, 0.0})),
            1e-15);
  EXPECT_TRUE(throws_kind([&] { matrix_power(a, -0.5); }, ErrorKind::SingularPower));
  // Purely imaginary powers vanish on the kernel: A^{it} is a partial isometry.
  EXPECT_LE(oracle::max_abs(matrix_power(a, Complex(0.0, 1.0)) -
                            std::exp(Complex(0.0, 1.0) * std::log(2.0)) * diag({1.0, 0.0})),
            1e-15);
}

TEST(MatrixPower, RejectsIndefiniteBase) {
  EXPECT_TRUE(throws_kind([&] { matrix_power(HermitianMatrix(diag({1.0, -1.0})), 0.5); },
                          ErrorKind::NotPositive));
}

TEST(MatrixPower, FirstPowerReproducesInput) {
  RandomStream rng(103);
  const HermitianMatrix a = random_psd(5, rng, 3);
  EXPECT_LE(oracle::max_abs(matrix_power(a, 1.0) - a.matrix()),
            1e-10 * operator_norm(a.matrix()));
}

TEST(MatrixPower, ExponentsAdd) {
  RandomStream rng(104);
  for (int trial = 0; trial < 50; ++trial) {
    const HermitianMatrix a = testing::random_faithful_psd(4, rng);
    const Complex z1(rng.normal(), rng.normal());
    const Complex z2(rng.normal(), rng.normal());
    const ComplexMatrix lhs = matrix_power(a, z1) * matrix_power(a, z2);
    const ComplexMatrix rhs = matrix_power(a, z1 + z2);
    EXPECT_LE(oracle::max_abs(lhs - rhs), 1e-9 * std::max(1.0, oracle::max_abs(rhs)));
  }
}

TEST(MatrixPower, MatchesOracle) {
  RandomStream rng(105);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianMatrix a = testing::random_faithful_psd(3, rng);
    const Complex z(rng.normal(), rng.normal());
    const ComplexMatrix ref = oracle::power(a.matrix(), z);
    EXPECT_LE(oracle::max_abs(matrix_power(a, z) - ref), 1e-10 * oracle::max_abs(ref));
  }
}

TEST(SingularValues, NilpotentExample) {
  ComplexMatrix x(2, 2);
  x << 0.0, 2.0, 0.0, 0.0;
  const RealVector s = singular_values(x);
  EXPECT_DOUBLE_EQ(s(0), 2.0);
  EXPECT_DOUBLE_EQ(s(1), 0.0);
}

TEST(SingularValues, UnitaryHasUnitSingularValues) {
  RandomStream rng(106);
  const RealVector s = singular_values(haar_unitary(5, rng));
  for (Eigen::Index i = 0; i < 5; ++i) EXPECT_NEAR(s(i), 1.0, 1e-13);
}

TEST(SingularValues, MatchOracleAdjointAndUnitaryInvariance) {
  RandomStream rng(107);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.index(6));
    const ComplexMatrix x = ginibre(d, rng);
    const RealVector s = singular_values(x);
    const auto ref = oracle::singular_values(x);
    const RealVector sa = singular_values(x.adjoint());
    const RealVector su = singular_values(haar_unitary(d, rng) * x * haar_unitary(d, rng));
    for (Eigen::Index i = 0; i < d; ++i) {
      EXPECT_NEAR(s(i), ref[static_cast<std::size_t>(i)], 1e-10);
      EXPECT_NEAR(s(i), sa(i), 1e-10);
      EXPECT_NEAR(s(i), su(i), 1e-10);
    }
  }
}

TEST(Polar, PositiveInputIsItsOwnModulus) {
  RandomStream rng(108);
  const HermitianMatrix a = random_psd(4, rng, 2);
  const PolarDecomposition pd = polar(a.matrix());
  EXPECT_LE(oracle::max_abs(pd.absx.matrix() - a.matrix()), 1e-10 * operator_norm(a.matrix()));
  // u is the support projection of a.
  EXPECT_LE(oracle::max_abs(pd.u - support_projection(hermitian_eigen(a))), 1e-10);
}

TEST(Polar, UnitaryInput) {
  RandomStream rng(109);
  const ComplexMatrix v = haar_unitary(4, rng);
  const PolarDecomposition pd = polar(v);
  EXPECT_LE(oracle::max_abs(pd.u - v), 1e-12);
  EXPECT_LE(oracle::max_abs(pd.absx.matrix() - ComplexMatrix::Identity(4, 4)), 1e-12);
}

TEST(Polar, RandomInputReassembles) {
  RandomStream rng(110);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.index(5));
    const Eigen::Index r = 1 + static_cast<Eigen::Index>(rng.index(static_cast<std::size_t>(d)));
    const ComplexMatrix x = ginibre(d, r, rng) * ginibre(r, d, rng);
    const PolarDecomposition pd = polar(x);
    EXPECT_LE(oracle::max_abs(x - pd.u * pd.absx.matrix()), 1e-10 * operator_norm(x));
    // u*u is the support projection of |x|.
    const ComplexMatrix uu = pd.u.adjoint() * pd.u;
    EXPECT_LE(oracle::max_abs(uu * uu - uu), 1e-10);
    EXPECT_NEAR(uu.trace().real(), static_cast<double>(r), 1e-9);
  }
}

TEST(FaithfulState, ValidatesTraceAndFaithfulness) {
  EXPECT_TRUE(throws_kind([] { FaithfulState s(HermitianMatrix(diag({0.5, 0.6}))); },
                          ErrorKind::NotNormalized));
  EXPECT_TRUE(throws_kind([] { FaithfulState s(HermitianMatrix(diag({1.0, 0.0}))); },
                          ErrorKind::NotFaithful));
  const FaithfulState m = FaithfulState::maximally_mixed(4);
  EXPECT_NEAR(m.matrix().trace().real(), 1.0, 1e-15);
  EXPECT_LE(oracle::max_abs(m.power(Complex(0.0, 1.3)) -
                            std::exp(Complex(0.0, 1.3) * std::log(0.25)) *
                                ComplexMatrix::Identity(4, 4)),
            1e-14);
}

TEST(Kron, BlockStructure) {
  const ComplexMatrix k = kron(diag({1.0, 2.0}), diag({3.0, 5.0}));
  EXPECT_LE(oracle::max_abs(k - diag({3.0, 5.0, 6.0, 10.0})), 0.0);
}

}  // namespace
}  // namespace qlp
