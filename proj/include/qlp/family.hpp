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

#ifndef QLP_FAMILY_HPP
#define QLP_FAMILY_HPP

#include <memory>
#include <variant>
#include <vector>

#include "qlp/spectral.hpp"

namespace qlp {

// z -> a z + b
struct Affine {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};

  Complex operator()(Complex z) const { return a * z + b; }
};

// Entire scalar functions allowed in a family: polynomials and exp(a z + b).
class ScalarFunction {
 public:
  // c[0] + c[1] z + c[2] z^2 + ...
  static ScalarFunction polynomial(std::vector<Complex> coefficients);
  static ScalarFunction exponential(Complex a, Complex b);

  Complex operator()(Complex z) const;

  bool constant() const;
  // True when |f(k + it)| does not depend on t for k = 0, 1.
  bool modulus_constant_on_boundary() const;

 private:
  struct Polynomial {
    std::vector<Complex> c;
  };
  struct Exponential {
    Complex a;
    Complex b;
  };
  explicit ScalarFunction(std::variant<Polynomial, Exponential> f) : f_(std::move(f)) {}

  std::variant<Polynomial, Exponential> f_;
};

// How the unitarily invariant norms of G(k + it) depend on t.
enum class BoundaryBehavior {
  Fixed,      // G(k + it) is the same up to a unimodular scalar
  Modulated,  // G(k + it) = U(t) X_k V(t) with U, V partial isometries that
              // preserve singular values; every Schatten norm is t-independent
  Varying,    // no certificate
};

// Matrix-valued analytic function on the closed strip 0 <= Re z <= 1, built
// as an immutable expression tree. Copies share nodes.
class AnalyticFamily {
 public:
  static AnalyticFamily constant(ComplexMatrix x);
  // base^{a z + b}. The base must be positive semidefinite, and either
  // faithful or with Re(a z + b) >= 0 on the whole closed strip.
  static AnalyticFamily power(const HermitianMatrix& base, Affine exponent);
  static AnalyticFamily scaled(ScalarFunction f, AnalyticFamily inner);
  static AnalyticFamily sum(std::vector<AnalyticFamily> terms);
  static AnalyticFamily product(std::vector<AnalyticFamily> factors);

  // Throws OutsideStrip unless 0 <= Re z <= 1.
  ComplexMatrix evaluate(Complex z) const;

  Eigen::Index dim() const noexcept;

  BoundaryBehavior boundary_behavior() const;

  struct Node;

 private:
  friend struct FamilyAccess;

  explicit AnalyticFamily(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace qlp

#endif  // QLP_FAMILY_HPP
