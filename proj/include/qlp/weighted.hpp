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

#ifndef QLP_WEIGHTED_HPP
#define QLP_WEIGHTED_HPP

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "qlp/family.hpp"
#include "qlp/schatten.hpp"

namespace qlp {

// A matrix algebra together with a faithful state sigma, the density of the
// reference state phi(x) = tr(sigma x).
class WeightedContext {
 public:
  explicit WeightedContext(FaithfulState state) : state_(std::move(state)) {}

  const FaithfulState& state() const noexcept { return state_; }
  Eigen::Index dim() const noexcept { return state_.dim(); }

 private:
  FaithfulState state_;
};

// sigma^{1/2p} x sigma^{1/2p}, the symmetric embedding of x at level p. For
// p = inf this is x itself.
ComplexMatrix symmetric_embedding(const WeightedContext& ctx, const ComplexMatrix& x, PExponent p);

// ||x||_{p,phi} = ||sigma^{1/2p} x sigma^{1/2p}||_p, and ||x|| at p = inf.
double weighted_norm(const WeightedContext& ctx, const ComplexMatrix& x, PExponent p);

// ||sigma^{(1-eta)/p} x sigma^{eta/p}||_p for eta in [0, 1]; eta = 1/2 gives
// the symmetric norm.
double asymmetric_weighted_norm(const WeightedContext& ctx, const ComplexMatrix& x, PExponent p,
                                double eta);

// Analytically continued modular automorphism sigma^{iz} x sigma^{-iz}.
ComplexMatrix modular_flow(const WeightedContext& ctx, const ComplexMatrix& x, Complex z);

// Extremal analytic family for the interpolation bound at (p0, p1, theta).
// With y = sigma^{1/2p_theta} x sigma^{1/2p_theta} = u|y| and
// alpha(z) = (1 - z)/p0 + z/p1, returns W(z) = u |y|^{p_theta alpha(z)}, stored
// as exp(p_theta alpha(z) log(m ||y||)) u |y/(m ||y||)|^{p_theta alpha(z)} with
// m the smallest nonzero singular value of y/||y||, so the powered base is
// faithful whatever the spread of the singular values of y. Then
// W(theta) = y and the boundary Schatten norms are the t-independent values
// ||y||_{p_theta}^{p_theta/p0} and ||y||_{p_theta}^{p_theta/p1}.
AnalyticFamily extremal_witness(const WeightedContext& ctx, const ComplexMatrix& x, PExponent p0,
                                PExponent p1, double theta);

// Linear map between matrix algebras, stored either as a superoperator acting
// on column-stacked matrices or as a Kraus family x -> sum_j K_j x K_j*.
class OperatorMap {
 public:
  // s has shape (d_out^2) x (d_in^2).
  static OperatorMap superoperator(ComplexMatrix s, Eigen::Index input_dim,
                                   Eigen::Index output_dim);
  static OperatorMap kraus(std::vector<ComplexMatrix> operators);
  // Tabulates an arbitrary linear function on the matrix units.
  static OperatorMap tabulate(Eigen::Index input_dim, Eigen::Index output_dim,
                              const std::function<ComplexMatrix(const ComplexMatrix&)>& f);
  static OperatorMap identity(Eigen::Index dim);

  ComplexMatrix operator()(const ComplexMatrix& x) const;

  Eigen::Index input_dim() const noexcept { return input_dim_; }
  Eigen::Index output_dim() const noexcept { return output_dim_; }

 private:
  struct Super {
    ComplexMatrix matrix;
  };
  struct Kraus {
    std::vector<ComplexMatrix> ops;
  };

  OperatorMap(std::variant<Super, Kraus> rep, Eigen::Index in, Eigen::Index out)
      : rep_(std::move(rep)), input_dim_(in), output_dim_(out) {}

  std::variant<Super, Kraus> rep_;
  Eigen::Index input_dim_;
  Eigen::Index output_dim_;
};

// Lower estimate of ||T||_{(p,phi) -> (q,psi)}: the largest ratio
// ||T(X)||_{q,psi} / ||X||_{p,phi} over the identity, sigma, all matrix units
// and `trials` random Ginibre inputs drawn from `seed`.
double operator_interp_norm(const OperatorMap& map, const WeightedContext& src,
                            const WeightedContext& dst, PExponent p, PExponent q, int trials,
                            std::uint64_t seed = 0);

}  // namespace qlp

#endif  // QLP_WEIGHTED_HPP
