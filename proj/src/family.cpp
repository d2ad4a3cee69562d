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
#include <string>

#include "qlp/error.hpp"

namespace qlp {

ScalarFunction ScalarFunction::polynomial(std::vector<Complex> coefficients) {
  if (coefficients.empty()) coefficients.push_back(0.0);
  for (const Complex& c : coefficients) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorKind::InvalidArgument, "non-finite polynomial coefficient");
    }
  }
  return ScalarFunction(Polynomial{std::move(coefficients)});
}

ScalarFunction ScalarFunction::exponential(Complex a, Complex b) {
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) ||
      !std::isfinite(b.real()) || !std::isfinite(b.imag())) {
    throw Error(ErrorKind::InvalidArgument, "non-finite exponential parameter");
  }
  return ScalarFunction(Exponential{a, b});
}

Complex ScalarFunction::operator()(Complex z) const {
  if (const auto* poly = std::get_if<Polynomial>(&f_)) {
    // Horner
    Complex acc = 0.0;
    for (auto it = poly->c.rbegin(); it != poly->c.rend(); ++it) acc = acc * z + *it;
    return acc;
  }
  const auto& e = std::get<Exponential>(f_);
  return std::exp(e.a * z + e.b);
}

bool ScalarFunction::constant() const {
  if (const auto* poly = std::get_if<Polynomial>(&f_)) {
    for (std::size_t k = 1; k < poly->c.size(); ++k) {
      if (poly->c[k] != Complex(0.0)) return false;
    }
    return true;
  }
  return std::get<Exponential>(f_).a == Complex(0.0);
}

bool ScalarFunction::modulus_constant_on_boundary() const {
  if (const auto* poly = std::get_if<Polynomial>(&f_)) {
    for (std::size_t k = 1; k < poly->c.size(); ++k) {
      if (poly->c[k] != Complex(0.0)) return false;
    }
    return true;
  }
  return std::get<Exponential>(f_).a.imag() == 0.0;
}

namespace {

struct ConstNode {
  ComplexMatrix value;
};

struct PowerNode {
  SpectralDecomposition base;
  Affine exponent;
  bool faithful;
};

struct ScaledNode {
  ScalarFunction f;
  AnalyticFamily inner;
};

struct SumNode {
  std::vector<AnalyticFamily> terms;
};

struct ProductNode {
  std::vector<AnalyticFamily> factors;
};

// Where a t-dependent, singular-value preserving factor sits.
enum class Side { None, Either, Left, Right, Both, Varying };

struct Shape {
  Side side = Side::None;
  bool phase = false;  // a t-dependent unimodular scalar factor is present
};

}  // namespace

struct AnalyticFamily::Node {
  std::variant<ConstNode, PowerNode, ScaledNode, SumNode, ProductNode> v;
  Eigen::Index dim;
};

namespace {

Shape classify(const AnalyticFamily::Node& node);

Side product_side(const std::vector<Side>& sides) {
  const std::size_t n = sides.size();
  if (n == 1) return sides[0];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (sides[i] != Side::None) return Side::Varying;
  }
  const Side first = sides.front();
  const Side last = sides.back();
  if (first == Side::Varying || first == Side::Right || first == Side::Both) return Side::Varying;
  if (last == Side::Varying || last == Side::Left || last == Side::Both) return Side::Varying;
  const bool left = first != Side::None;
  const bool right = last != Side::None;
  if (left && right) return Side::Both;
  if (left) return Side::Left;
  if (right) return Side::Right;
  return Side::None;
}

}  // namespace

struct FamilyAccess {
  static const AnalyticFamily::Node& node(const AnalyticFamily& f) { return *f.node_; }
};

namespace {

Shape shape_of(const AnalyticFamily& f) { return classify(FamilyAccess::node(f)); }

Shape classify(const AnalyticFamily::Node& node) {
  return std::visit(
      [](const auto& n) -> Shape {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ConstNode>) {
          return {};
        } else if constexpr (std::is_same_v<T, PowerNode>) {
          const Complex a = n.exponent.a;
          if (a == Complex(0.0)) return {};
          if (a.imag() != 0.0) return {Side::Varying, false};
          if (!n.faithful) {
            // Singular base: 0^{is} = 0 but 0^0 = 1, so a line where the real
            // part of the exponent vanishes is not certified.
            const double re0 = n.exponent.b.real();
            const double re1 = a.real() + n.exponent.b.real();
            if (re0 <= 0.0 || re1 <= 0.0) return {Side::Varying, false};
          }
          return {Side::Either, false};
        } else if constexpr (std::is_same_v<T, ScaledNode>) {
          if (!n.f.modulus_constant_on_boundary()) return {Side::Varying, false};
          Shape inner = shape_of(n.inner);
          inner.phase = inner.phase || !n.f.constant();
          return inner;
        } else if constexpr (std::is_same_v<T, SumNode>) {
          for (const auto& term : n.terms) {
            const Shape s = shape_of(term);
            if (s.side != Side::None || s.phase) return {Side::Varying, false};
          }
          return {};
        } else {
          std::vector<Side> sides;
          bool phase = false;
          sides.reserve(n.factors.size());
          for (const auto& f : n.factors) {
            const Shape s = shape_of(f);
            sides.push_back(s.side);
            phase = phase || s.phase;
          }
          return {product_side(sides), phase};
        }
      },
      node.v);
}

}  // namespace

namespace {

void require_same_dim(const std::vector<AnalyticFamily>& parts, const char* what) {
  if (parts.empty()) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " needs at least one operand");
  }
  for (const auto& p : parts) {
    if (p.dim() != parts.front().dim()) {
      throw Error(ErrorKind::DimensionMismatch,
                  std::string(what) + " operands have different dimensions");
    }
  }
}

}  // namespace

AnalyticFamily AnalyticFamily::constant(ComplexMatrix x) {
  require_square_finite(x, "constant family value");
  const Eigen::Index d = x.rows();
  return AnalyticFamily(std::make_shared<const Node>(Node{ConstNode{std::move(x)}, d}));
}

AnalyticFamily AnalyticFamily::power(const HermitianMatrix& base, Affine exponent) {
  SpectralDecomposition eig = hermitian_eigen(base);
  const double top = std::max(1.0, std::abs(eig.eigenvalues(0)));
  const double bottom = eig.eigenvalues(eig.dim() - 1);
  if (bottom < -tol::kFaithful * top) {
    throw Error(ErrorKind::NotPositive, "power family base is not positive semidefinite");
  }
  const bool faithful = bottom >= tol::kFaithful;
  if (!faithful) {
    const bool bounded = exponent.a.imag() == 0.0 && exponent.b.real() >= 0.0 &&
                         exponent.a.real() + exponent.b.real() >= 0.0;
    if (!bounded) {
      throw Error(ErrorKind::SingularPower,
                  "power family of a non-faithful base needs Re(a z + b) >= 0 "
                  "on the closed strip");
    }
  }
  const Eigen::Index d = base.dim();
  return AnalyticFamily(std::make_shared<const Node>(
      Node{PowerNode{std::move(eig), exponent, faithful}, d}));
}

AnalyticFamily AnalyticFamily::scaled(ScalarFunction f, AnalyticFamily inner) {
  const Eigen::Index d = inner.dim();
  return AnalyticFamily(
      std::make_shared<const Node>(Node{ScaledNode{std::move(f), std::move(inner)}, d}));
}

AnalyticFamily AnalyticFamily::sum(std::vector<AnalyticFamily> terms) {
  require_same_dim(terms, "sum");
  const Eigen::Index d = terms.front().dim();
  return AnalyticFamily(std::make_shared<const Node>(Node{SumNode{std::move(terms)}, d}));
}

AnalyticFamily AnalyticFamily::product(std::vector<AnalyticFamily> factors) {
  require_same_dim(factors, "product");
  // Flatten nested products so the boundary classifier sees every factor.
  std::vector<AnalyticFamily> flat;
  for (auto& f : factors) {
    if (const auto* p = std::get_if<ProductNode>(&f.node_->v)) {
      flat.insert(flat.end(), p->factors.begin(), p->factors.end());
    } else {
      flat.push_back(std::move(f));
    }
  }
  const Eigen::Index d = flat.front().dim();
  return AnalyticFamily(std::make_shared<const Node>(Node{ProductNode{std::move(flat)}, d}));
}

Eigen::Index AnalyticFamily::dim() const noexcept { return node_->dim; }

namespace {

ComplexMatrix eval_node(const AnalyticFamily::Node& node, Complex z);

}  // namespace

ComplexMatrix AnalyticFamily::evaluate(Complex z) const {
  if (!(z.real() >= 0.0 && z.real() <= 1.0)) {
    throw Error(ErrorKind::OutsideStrip,
                "Re z = " + std::to_string(z.real()) + " lies outside [0, 1]");
  }
  return eval_node(*node_, z);
}

BoundaryBehavior AnalyticFamily::boundary_behavior() const {
  switch (classify(*node_).side) {
    case Side::None: return BoundaryBehavior::Fixed;
    case Side::Varying: return BoundaryBehavior::Varying;
    default: return BoundaryBehavior::Modulated;
  }
}

namespace {

ComplexMatrix eval_node(const AnalyticFamily::Node& node, Complex z) {
  return std::visit(
      [z](const auto& n) -> ComplexMatrix {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ConstNode>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, PowerNode>) {
          return matrix_power(n.base, n.exponent(z));
        } else if constexpr (std::is_same_v<T, ScaledNode>) {
          return n.f(z) * n.inner.evaluate(z);
        } else if constexpr (std::is_same_v<T, SumNode>) {
          ComplexMatrix acc = n.terms.front().evaluate(z);
          for (std::size_t i = 1; i < n.terms.size(); ++i) acc += n.terms[i].evaluate(z);
          return acc;
        } else {
          ComplexMatrix acc = n.factors.front().evaluate(z);
          for (std::size_t i = 1; i < n.factors.size(); ++i) acc = acc * n.factors[i].evaluate(z);
          return acc;
        }
      },
      node.v);
}

}  // namespace

}  // namespace qlp
