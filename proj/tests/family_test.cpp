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


#include "qlp/family.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qlp/random.hpp"
#include "support.hpp"

namespace qlp {
namespace {

using testing::diag;
using testing::random_faithful_psd;
using testing::throws_kind;

const Complex kI(0.0, 1.0);

TEST(ScalarFunction, PolynomialAndExponential) {
  const ScalarFunction poly = ScalarFunction::polynomial({1.0, 2.0, 3.0});
  EXPECT_EQ(poly(Complex(2.0, 0.0)), Complex(17.0, 0.0));
  EXPECT_FALSE(poly.constant());
  EXPECT_FALSE(poly.modulus_constant_on_boundary());
  EXPECT_TRUE(ScalarFunction::polynomial({Complex(0.0, 2.0)}).constant());

  const ScalarFunction e = ScalarFunction::exponential(kI * 0.5, 0.25);
  EXPECT_NEAR(std::abs(e(Complex(0.3, 0.0)) - std::exp(Complex(0.25, 0.15))), 0.0, 1e-15);
  // |exp(a (k + it) + b)| = exp(Re(a k + b) - t Im a).
  EXPECT_FALSE(e.modulus_constant_on_boundary());
  EXPECT_TRUE(ScalarFunction::exponential(2.0, kI).modulus_constant_on_boundary());
}

TEST(Evaluate, ConstantIsConstant) {
  const ComplexMatrix x = diag({1.0, -2.0});
  const AnalyticFamily f = AnalyticFamily::constant(x);
  for (Complex z : {Complex(0.0, 0.0), Complex(0.3, -5.0), Complex(1.0, 2.0)}) {
    EXPECT_EQ(f.evaluate(z), x);
  }
  EXPECT_EQ(f.boundary_behavior(), BoundaryBehavior::Fixed);
  EXPECT_EQ(f.dim(), 2);
}

TEST(Evaluate, PowerAtOneIsTheBase) {
  RandomStream rng(301);
  const HermitianMatrix a = random_faithful_psd(3, rng);
  const AnalyticFamily f = AnalyticFamily::power(a, Affine{});
  EXPECT_LE(oracle::max_abs(f.evaluate(1.0) - a.matrix()), 1e-10 * oracle::max_abs(a.matrix()));
  EXPECT_LE(oracle::max_abs(f.evaluate(0.0) - ComplexMatrix::Identity(3, 3)), 1e-12);
}

TEST(Evaluate, ProductMatchesDirectArithmetic) {
  RandomStream rng(302);
  const HermitianMatrix a = random_faithful_psd(3, rng);
  const HermitianMatrix b = random_faithful_psd(3, rng);
  const AnalyticFamily f = AnalyticFamily::product(
      {AnalyticFamily::power(a, Affine{}), AnalyticFamily::constant(b.matrix())});
  const ComplexMatrix expected = oracle::power(a.matrix(), 0.5) * b.matrix();
  EXPECT_LE(oracle::max_abs(f.evaluate(0.5) - expected), 1e-10 * oracle::max_abs(expected));
}

TEST(Evaluate, SumAndScaledNodes) {
  RandomStream rng(303);
  const HermitianMatrix a = random_faithful_psd(3, rng);
  const ComplexMatrix x = ginibre(3, rng);
  const ScalarFunction f = ScalarFunction::polynomial({1.0, kI});
  const AnalyticFamily fam = AnalyticFamily::sum(
      {AnalyticFamily::scaled(f, AnalyticFamily::constant(x)),
       AnalyticFamily::power(a, Affine{2.0, -0.5})});
  const Complex z(0.4, 1.3);
  const ComplexMatrix expected = (1.0 + kI * z) * x + oracle::power(a.matrix(), 2.0 * z - 0.5);
  EXPECT_LE(oracle::max_abs(fam.evaluate(z) - expected), 1e-10 * oracle::max_abs(expected));
}

TEST(Evaluate, OutsideStripIsRejected) {
  const AnalyticFamily f = AnalyticFamily::constant(diag({1.0}));
  EXPECT_TRUE(throws_kind([&] { f.evaluate(Complex(-0.01, 0.0)); }, ErrorKind::OutsideStrip));
  EXPECT_TRUE(throws_kind([&] { f.evaluate(Complex(1.01, 3.0)); }, ErrorKind::OutsideStrip));
  EXPECT_TRUE(throws_kind([&] { f.evaluate(Complex(std::nan(""), 0.0)); }, ErrorKind::OutsideStrip));
  EXPECT_NO_THROW(f.evaluate(Complex(1.0, -100.0)));
}

TEST(Construction, SingularBaseNeedsNonNegativeExponent) {
  const HermitianMatrix p(diag({1.0, 0.0}));
  EXPECT_NO_THROW(AnalyticFamily::power(p, Affine{}));
  EXPECT_NO_THROW(AnalyticFamily::power(p, Affine{-1.0, 1.0}));
  EXPECT_TRUE(throws_kind([&] { AnalyticFamily::power(p, Affine{1.0, -0.5}); },
                          ErrorKind::SingularPower));
  EXPECT_TRUE(throws_kind([&] { AnalyticFamily::power(p, Affine{kI, 0.0}); },
                          ErrorKind::SingularPower));
  EXPECT_TRUE(throws_kind([] { AnalyticFamily::power(HermitianMatrix(diag({1.0, -1.0})), Affine{}); },
                          ErrorKind::NotPositive));
}

TEST(Construction, DimensionsMustAgree) {
  EXPECT_TRUE(throws_kind(
      [] {
        AnalyticFamily::sum({AnalyticFamily::constant(diag({1.0})),
                             AnalyticFamily::constant(diag({1.0, 2.0}))});
      },
      ErrorKind::DimensionMismatch));
  EXPECT_TRUE(throws_kind([] { AnalyticFamily::product({}); }, ErrorKind::InvalidArgument));
}

TEST(BoundaryBehavior, Classification) {
  RandomStream rng(304);
  const HermitianMatrix a = random_faithful_psd(3, rng);
  const AnalyticFamily c = AnalyticFamily::constant(ginibre(3, rng));
  const AnalyticFamily pw = AnalyticFamily::power(a, Affine{});
  EXPECT_EQ(pw.boundary_behavior(), BoundaryBehavior::Modulated);
  EXPECT_EQ(AnalyticFamily::product({pw, c}).boundary_behavior(), BoundaryBehavior::Modulated);
  EXPECT_EQ(AnalyticFamily::product({pw, c, pw}).boundary_behavior(), BoundaryBehavior::Modulated);
  // A t-dependent unitary in the middle changes singular values.
  EXPECT_EQ(AnalyticFamily::product({c, pw, c}).boundary_behavior(), BoundaryBehavior::Varying);
  EXPECT_EQ(AnalyticFamily::sum({pw, c}).boundary_behavior(), BoundaryBehavior::Varying);
  EXPECT_EQ(AnalyticFamily::power(a, Affine{kI, 0.0}).boundary_behavior(),
            BoundaryBehavior::Varying);
  EXPECT_EQ(
      AnalyticFamily::scaled(ScalarFunction::polynomial({0.0, 1.0}), c).boundary_behavior(),
      BoundaryBehavior::Varying);
}

// Schatten norms of a Modulated family are constant along each boundary line.
TEST(BoundaryBehavior, ModulatedNormsAreTIndependent) {
  RandomStream rng(305);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianMatrix a = random_faithful_psd(3, rng);
    const HermitianMatrix b = random_faithful_psd(3, rng);
    const AnalyticFamily f = AnalyticFamily::product(
        {AnalyticFamily::power(a, Affine{0.7, 0.1}), AnalyticFamily::constant(ginibre(3, rng)),
         AnalyticFamily::power(b, Affine{-0.4, 0.2})});
    ASSERT_EQ(f.boundary_behavior(), BoundaryBehavior::Modulated);
    for (double k : {0.0, 1.0}) {
      const double ref = oracle::schatten(f.evaluate(k), 0.6);
      for (double t : {-3.0, -0.5, 1.0, 2.5}) {
        EXPECT_LE(testing::rel_diff(oracle::schatten(f.evaluate(Complex(k, t)), 0.6), ref), 1e-9);
      }
    }
  }
}

// (d/dx + i d/dy) f = 0 entrywise, by central differences with step 1e-4.
double cauchy_riemann_defect(const AnalyticFamily& f, Complex z) {
  const double h = 1e-4;
  const ComplexMatrix dx = (f.evaluate(z + h) - f.evaluate(z - h)) / (2.0 * h);
  const ComplexMatrix dy = (f.evaluate(z + kI * h) - f.evaluate(z - kI * h)) / (2.0 * h);
  return oracle::max_abs(dx + kI * dy);
}

TEST(Analyticity, CauchyRiemannHoldsInTheInterior) {
  RandomStream rng(306);
  for (int trial = 0; trial < 10; ++trial) {
    const HermitianMatrix a = random_faithful_psd(3, rng);
    const HermitianMatrix b = random_faithful_psd(3, rng);
    const AnalyticFamily f = AnalyticFamily::sum(
        {AnalyticFamily::product({AnalyticFamily::power(a, Affine{1.0, 0.0}),
                                  AnalyticFamily::constant(ginibre(3, rng)),
                                  AnalyticFamily::power(b, Affine{Complex(-0.5, 0.3), 0.5})}),
         AnalyticFamily::scaled(ScalarFunction::exponential(Complex(0.2, 1.0), 0.0),
                                AnalyticFamily::constant(ginibre(3, rng))),
         AnalyticFamily::scaled(ScalarFunction::polynomial({0.0, 1.0, kI}),
                                AnalyticFamily::power(a, Affine{0.5, 0.0}))});
    for (Complex z : {Complex(0.5, 0.0), Complex(0.2, 1.5), Complex(0.8, -2.0)}) {
      EXPECT_LE(cauchy_riemann_defect(f, z), 1e-6) << z;
    }
  }
}

}  // namespace
}  // namespace qlp
