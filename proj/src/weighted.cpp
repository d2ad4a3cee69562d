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

#include "qlp/weighted.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graded.hpp"
#include "qlp/error.hpp"
#include "qlp/random.hpp"

namespace qlp {

namespace {

void require_dim(const WeightedContext& ctx, const ComplexMatrix& x) {
  require_square_finite(x, "weighted-norm argument");
  if (x.rows() != ctx.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "matrix of dimension " + std::to_string(x.rows()) +
                    " used with a state of dimension " + std::to_string(ctx.dim()));
  }
}

// ||sigma^l x sigma^r||_p evaluated in the eigenbasis of sigma, where the
// weights are diagonal scalings, with singular values that stay accurate
// relative to their size. The small ones are genuine: sigma is faithful, so the
// product has the rank of x, and that rank is read off x where the noise
// cutoff of schatten_norm applies.
double graded_norm(const WeightedContext& ctx, const ComplexMatrix& x, double l, double r,
                   PExponent p) {
  const RealVector sx = singular_values(x);
  if (!(sx(0) > 0.0)) return 0.0;
  const Eigen::Index rank = (sx.array() > tol::kRelativeZero * sx(0)).count();
  const SpectralDecomposition& eig = ctx.state().eigen();
  const Eigen::Index d = ctx.dim();
  const detail::WideMatrix xe =
      (eig.unitary.adjoint() * x * eig.unitary).cast<detail::Wide>();
  detail::WideReal left(d), right(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const long double lambda = eig.eigenvalues(i);
    left(i) = std::pow(lambda, static_cast<long double>(l));
    right(i) = std::pow(lambda, static_cast<long double>(r));
  }
  const detail::WideReal s2 = detail::two_sided_squared_singular_values(
      left.cast<detail::Wide>().asDiagonal() * xe * right.cast<detail::Wide>().asDiagonal());
  // Same scaling as schatten_norm: factor out the largest value.
  const long double lp = static_cast<long double>(p.value());
  long double sum = 0.0L;
  for (Eigen::Index i = rank - 1; i >= 0; --i) sum += std::pow(s2(i) / s2(0), 0.5L * lp);
  return static_cast<double>(std::sqrt(s2(0)) * std::pow(sum, 1.0L / lp));
}

}  // namespace

ComplexMatrix symmetric_embedding(const WeightedContext& ctx, const ComplexMatrix& x,
                                  PExponent p) {
  require_dim(ctx, x);
  if (p.is_infinite()) return x;
  const ComplexMatrix s = ctx.state().power(0.5 * p.reciprocal());
  return s * x * s;
}

double weighted_norm(const WeightedContext& ctx, const ComplexMatrix& x, PExponent p) {
  require_dim(ctx, x);
  if (p.is_infinite()) return operator_norm(x);
  const double e = 0.5 * p.reciprocal();
  return graded_norm(ctx, x, e, e, p);
}

double asymmetric_weighted_norm(const WeightedContext& ctx, const ComplexMatrix& x,
                                PExponent p, double eta) {
  require_dim(ctx, x);
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "eta must lie in [0, 1]");
  }
  if (p.is_infinite()) return operator_norm(x);
  return graded_norm(ctx, x, (1.0 - eta) * p.reciprocal(), eta * p.reciprocal(), p);
}

ComplexMatrix modular_flow(const WeightedContext& ctx, const ComplexMatrix& x, Complex z) {
  require_dim(ctx, x);
  const Complex iz = Complex(0.0, 1.0) * z;
  return ctx.state().power(iz) * x * ctx.state().power(-iz);
}

AnalyticFamily extremal_witness(const WeightedContext& ctx, const ComplexMatrix& x,
                                PExponent p0, PExponent p1, double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "theta must lie in (0, 1)");
  }
  if (!(p0 < p1)) {
    throw Error(ErrorKind::InvalidArgument, "extremal witness needs p0 < p1");
  }
  const PExponent pt = p_theta(p0, p1, theta);
  const ComplexMatrix y = symmetric_embedding(ctx, x, pt);
  const double scale = schatten_norm(y, pt);
  if (!(scale > 0.0)) {
    throw Error(ErrorKind::ZeroInput, "extremal witness of the zero matrix");
  }
  const PolarDecomposition pd = qlp::polar(ComplexMatrix(y / scale));
  // p_theta alpha(z) = a z + b
  const double b = pt.value() * p0.reciprocal();
  const double a = pt.value() * (p1.reciprocal() - p0.reciprocal());
  // u annihilates the kernel of |y|, so |y| may be replaced by the faithful
  // |y| + (1 - u*u). This keeps W(z) well defined where a p_k is infinite and
  // lets the boundary norms be certified t-independent. The support part is
  // further rescaled by c so that its smallest retained singular value is 1:
  // genuine singular values below the faithfulness floor would otherwise be
  // powered as zeros. The factor c^{-(a z + b)} moves into the scalar.
  const RealVector s = singular_values(ComplexMatrix(y / scale));
  double smallest = s(0);
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > tol::kRelativeZero * s(0)) smallest = s(i);
  }
  const double log_scale = std::log(scale) + std::log(smallest);
  const Eigen::Index d = y.rows();
  const HermitianMatrix base(ComplexMatrix(pd.absx.matrix() / smallest +
                                           ComplexMatrix::Identity(d, d) -
                                           pd.u.adjoint() * pd.u));
  auto unit = AnalyticFamily::product(
      {AnalyticFamily::constant(pd.u), AnalyticFamily::power(base, Affine{a, b})});
  return AnalyticFamily::scaled(ScalarFunction::exponential(a * log_scale, b * log_scale),
                                std::move(unit));
}

OperatorMap OperatorMap::superoperator(ComplexMatrix s, Eigen::Index input_dim,
                                       Eigen::Index output_dim) {
  if (input_dim < 1 || output_dim < 1 || s.rows() != output_dim * output_dim ||
      s.cols() != input_dim * input_dim) {
    throw Error(ErrorKind::DimensionMismatch, "superoperator shape does not match dimensions");
  }
  return OperatorMap(Super{std::move(s)}, input_dim, output_dim);
}

OperatorMap OperatorMap::kraus(std::vector<ComplexMatrix> operators) {
  if (operators.empty()) {
    throw Error(ErrorKind::InvalidArgument, "Kraus family must be non-empty");
  }
  const Eigen::Index out = operators.front().rows();
  const Eigen::Index in = operators.front().cols();
  for (const auto& k : operators) {
    if (k.rows() != out || k.cols() != in) {
      throw Error(ErrorKind::DimensionMismatch, "Kraus operators differ in shape");
    }
  }
  return OperatorMap(Kraus{std::move(operators)}, in, out);
}

OperatorMap OperatorMap::tabulate(Eigen::Index input_dim, Eigen::Index output_dim,
                                  const std::function<ComplexMatrix(const ComplexMatrix&)>& f) {
  ComplexMatrix s(output_dim * output_dim, input_dim * input_dim);
  ComplexMatrix unit = ComplexMatrix::Zero(input_dim, input_dim);
  for (Eigen::Index j = 0; j < input_dim; ++j) {
    for (Eigen::Index i = 0; i < input_dim; ++i) {
      unit(i, j) = 1.0;
      const ComplexMatrix image = f(unit);
      if (image.rows() != output_dim || image.cols() != output_dim) {
        throw Error(ErrorKind::DimensionMismatch, "tabulated map returned the wrong shape");
      }
      s.col(j * input_dim + i) = image.reshaped();
      unit(i, j) = 0.0;
    }
  }
  return superoperator(std::move(s), input_dim, output_dim);
}

OperatorMap OperatorMap::identity(Eigen::Index dim) {
  return kraus({ComplexMatrix::Identity(dim, dim)});
}

ComplexMatrix OperatorMap::operator()(const ComplexMatrix& x) const {
  if (x.rows() != input_dim_ || x.cols() != input_dim_) {
    throw Error(ErrorKind::DimensionMismatch, "operator map applied to wrong-sized input");
  }
  if (const auto* sup = std::get_if<Super>(&rep_)) {
    const Eigen::VectorXcd v = sup->matrix * x.reshaped();
    return v.reshaped(output_dim_, output_dim_);
  }
  const auto& k = std::get<Kraus>(rep_);
  ComplexMatrix out = ComplexMatrix::Zero(output_dim_, output_dim_);
  for (const auto& op : k.ops) out += op * x * op.adjoint();
  return out;
}

double operator_interp_norm(const OperatorMap& map, const WeightedContext& src,
                            const WeightedContext& dst, PExponent p, PExponent q, int trials,
                            std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  if (map.input_dim() != src.dim() || map.output_dim() != dst.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "map dimensions do not match the contexts");
  }
  const Eigen::Index d = src.dim();
  double best = 0.0;
  auto probe = [&](const ComplexMatrix& x) {
    const double den = weighted_norm(src, x, p);
    if (den > 0.0) best = std::max(best, weighted_norm(dst, map(x), q) / den);
  };
  probe(ComplexMatrix::Identity(d, d));
  probe(src.state().matrix());
  ComplexMatrix unit = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      unit(i, j) = 1.0;
      probe(unit);
      unit(i, j) = 0.0;
    }
  }
  RandomStream rng(mix64(seed ^ 0x6f70696e74657270ull));
  for (int t = 0; t < trials; ++t) probe(ginibre(d, rng));
  return best;
}

}  // namespace qlp
