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

#include "qlp/renyi.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "graded.hpp"
#include "qlp/error.hpp"

namespace qlp {

namespace {

using detail::graded_squared_singular_values;
using detail::Wide;
using detail::WideMatrix;
using detail::WideReal;
using detail::WideVector;

void require_divergence_exponent(double p) {
  if (!(p > 0.0) || p == 1.0 || !std::isfinite(p)) {
    throw Error(ErrorKind::InvalidExponent,
                "divergence needs p in (0, 1) or (1, inf), got " + std::to_string(p));
  }
}

// Rebuilds a state from a matrix that should be a density, mapping a failed
// faithfulness test onto `kind`.
FaithfulState to_state(const ComplexMatrix& m, ErrorKind kind, const char* what) {
  try {
    return FaithfulState(HermitianMatrix(m));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotFaithful || e.kind() == ErrorKind::NotPositive) {
      throw Error(kind, std::string(what) + ": " + e.detail());
    }
    throw;
  }
}

}  // namespace

StatePair::StatePair(FaithfulState rho_, FaithfulState sigma_)
    : rho(std::move(rho_)), sigma(std::move(sigma_)) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "rho and sigma differ in dimension");
  }
}

double sandwiched_divergence(const FaithfulState& rho, const FaithfulState& sigma, double p) {
  require_divergence_exponent(p);
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "rho and sigma differ in dimension");
  }
  // tr[(s^a rho s^a)^p] is the sum of s_i^{2p} over the singular values of
  // rho^{1/2} s^a, taken in the eigenbasis of sigma where s^a is a column
  // scaling. Extended precision with a graded-accurate SVD covers two losses
  // that double cannot absorb: s^a spans many orders of magnitude for p near 0,
  // and for nearly equal states the sum is within a few ulps of 1 while the
  // divergence is tiny.
  const Eigen::SelfAdjointEigenSolver<WideMatrix> er(rho.matrix().cast<Wide>());
  const Eigen::SelfAdjointEigenSolver<WideMatrix> es(sigma.matrix().cast<Wide>());
  if (er.info() != Eigen::Success || es.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "eigendecomposition failed");
  }
  const long double lp = p;
  const long double a = (1.0L - lp) / (2.0L * lp);
  const Eigen::Index d = rho.dim();
  WideVector root(d), weight(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    root(i) = std::sqrt(std::max(er.eigenvalues()(i), 0.0L));
    weight(i) = std::pow(std::max(es.eigenvalues()(i), 0.0L), a);
  }
  const WideMatrix basis = er.eigenvectors().adjoint() * es.eigenvectors();
  const WideReal s2 = graded_squared_singular_values(basis.adjoint() * root.asDiagonal() * basis *
                                                     weight.asDiagonal());
  if (!s2.allFinite() || !(s2(0) > 0.0L)) {
    throw Error(ErrorKind::ConvergenceFailure, "singular values are not finite");
  }
  // The plain sum is close to 1 for nearly equal states, where splitting off
  // the largest term would cancel two O(1) logarithms. Rescale only when the
  // plain sum leaves the normal range.
  long double plain = 0.0L;
  for (Eigen::Index i = d - 1; i >= 0; --i) plain += std::pow(s2(i), lp);
  if (std::isnormal(plain) && plain < 1e4000L) {
    return static_cast<double>(std::log(plain) / (lp - 1.0L));
  }
  long double acc = 0.0L;
  for (Eigen::Index i = d - 1; i >= 0; --i) acc += std::pow(s2(i) / s2(0), lp);
  return static_cast<double>((lp * std::log(s2(0)) + std::log(acc)) / (lp - 1.0L));
}

double sandwiched_divergence(const StatePair& pair, double p) {
  return sandwiched_divergence(pair.rho, pair.sigma, p);
}

ComplexMatrix partial_trace_b(const ComplexMatrix& x, Eigen::Index dim_a, Eigen::Index dim_b) {
  if (x.rows() != dim_a * dim_b || x.cols() != dim_a * dim_b) {
    throw Error(ErrorKind::DimensionMismatch, "partial trace: shape is not dim_a * dim_b");
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
  for (Eigen::Index i = 0; i < dim_a; ++i)
    for (Eigen::Index j = 0; j < dim_a; ++j)
      for (Eigen::Index k = 0; k < dim_b; ++k) out(i, j) += x(i * dim_b + k, j * dim_b + k);
  return out;
}

ComplexMatrix partial_trace_a(const ComplexMatrix& x, Eigen::Index dim_a, Eigen::Index dim_b) {
  if (x.rows() != dim_a * dim_b || x.cols() != dim_a * dim_b) {
    throw Error(ErrorKind::DimensionMismatch, "partial trace: shape is not dim_a * dim_b");
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (Eigen::Index k = 0; k < dim_b; ++k)
    for (Eigen::Index l = 0; l < dim_b; ++l)
      for (Eigen::Index i = 0; i < dim_a; ++i) out(k, l) += x(i * dim_b + k, i * dim_b + l);
  return out;
}

ConditionalExpectation::ConditionalExpectation(SubalgebraSpec spec, FaithfulState sigma,
                                               FaithfulState sigma_n,
                                               std::vector<Eigen::Index> order,
                                               std::vector<Eigen::Index> block_of,
                                               ComplexMatrix sigma_b)
    : spec_(std::move(spec)),
      sigma_(std::move(sigma)),
      sigma_n_(std::move(sigma_n)),
      order_(std::move(order)),
      block_of_(std::move(block_of)),
      sigma_b_(std::move(sigma_b)) {}

ComplexMatrix ConditionalExpectation::operator()(const ComplexMatrix& x) const {
  if (x.rows() != dim() || x.cols() != dim()) {
    throw Error(ErrorKind::DimensionMismatch, "conditional expectation: wrong input shape");
  }
  if (const auto* tf = std::get_if<TensorFactor>(&spec_)) {
    const ComplexMatrix weighted =
        kron(ComplexMatrix::Identity(tf->dim_a, tf->dim_a), sigma_b_) * x;
    return kron(partial_trace_b(weighted, tf->dim_a, tf->dim_b),
                ComplexMatrix::Identity(tf->dim_b, tf->dim_b));
  }
  const auto& bp = std::get<BlockPartition>(spec_);
  ComplexMatrix y = bp.basis.adjoint() * x * bp.basis;
  for (Eigen::Index i = 0; i < y.rows(); ++i)
    for (Eigen::Index j = 0; j < y.cols(); ++j)
      if (block_of_[i] != block_of_[j]) y(i, j) = 0.0;
  return bp.basis * y * bp.basis.adjoint();
}

ComplexMatrix ConditionalExpectation::restrict_density(const ComplexMatrix& rho) const {
  if (rho.rows() != dim() || rho.cols() != dim()) {
    throw Error(ErrorKind::DimensionMismatch, "restriction: wrong input shape");
  }
  if (const auto* tf = std::get_if<TensorFactor>(&spec_)) {
    return partial_trace_b(rho, tf->dim_a, tf->dim_b);
  }
  const auto& bp = std::get<BlockPartition>(spec_);
  const ComplexMatrix y = bp.basis.adjoint() * rho * bp.basis;
  const auto n = static_cast<Eigen::Index>(order_.size());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      if (block_of_[order_[a]] == block_of_[order_[b]]) out(a, b) = y(order_[a], order_[b]);
  return out;
}

ComplexMatrix ConditionalExpectation::lift_density(const ComplexMatrix& rho_n) const {
  if (rho_n.rows() != subalgebra_dim() || rho_n.cols() != subalgebra_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "lift: wrong input shape");
  }
  if (std::holds_alternative<TensorFactor>(spec_)) return kron(rho_n, sigma_b_);
  const auto& bp = std::get<BlockPartition>(spec_);
  const auto n = static_cast<Eigen::Index>(order_.size());
  ComplexMatrix y = ComplexMatrix::Zero(n, n);
  double off_block = 0.0;
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) {
      if (block_of_[order_[a]] == block_of_[order_[b]]) {
        y(order_[a], order_[b]) = rho_n(a, b);
      } else {
        off_block = std::max(off_block, std::abs(rho_n(a, b)));
      }
    }
  if (off_block > 1e-12) {
    throw Error(ErrorKind::IncompatibleState, "lift: density is not block diagonal");
  }
  return bp.basis * y * bp.basis.adjoint();
}

ConditionalExpectation conditional_expectation(const SubalgebraSpec& spec,
                                               const FaithfulState& sigma) {
  const Eigen::Index d = sigma.dim();
  if (const auto* tf = std::get_if<TensorFactor>(&spec)) {
    if (tf->dim_a < 1 || tf->dim_b < 1 || tf->dim_a * tf->dim_b != d) {
      throw Error(ErrorKind::InvalidArgument, "tensor factor dimensions do not multiply to dim");
    }
    const ComplexMatrix sa = partial_trace_b(sigma.matrix(), tf->dim_a, tf->dim_b);
    const ComplexMatrix sb = partial_trace_a(sigma.matrix(), tf->dim_a, tf->dim_b);
    const double defect = max_abs_entry(sigma.matrix() - kron(sa, sb));
    if (defect > 1e-10) {
      throw Error(ErrorKind::IncompatibleState,
                  "sigma is not a product state (defect " + std::to_string(defect) + ")");
    }
    FaithfulState sigma_n = to_state(sa, ErrorKind::FaithfulnessLost, "restricted sigma");
    return ConditionalExpectation(spec, sigma, std::move(sigma_n), {}, {}, sb);
  }

  const auto& bp = std::get<BlockPartition>(spec);
  if (bp.basis.rows() != d || bp.basis.cols() != d) {
    throw Error(ErrorKind::DimensionMismatch, "block basis must be dim x dim");
  }
  const double unitary_defect =
      max_abs_entry(bp.basis.adjoint() * bp.basis - ComplexMatrix::Identity(d, d));
  if (unitary_defect > tol::kUnitary) {
    throw Error(ErrorKind::InvalidArgument, "block basis is not unitary");
  }
  std::vector<Eigen::Index> block_of(static_cast<std::size_t>(d), -1);
  std::vector<Eigen::Index> order;
  for (std::size_t k = 0; k < bp.blocks.size(); ++k) {
    if (bp.blocks[k].empty()) throw Error(ErrorKind::InvalidArgument, "empty block");
    for (Eigen::Index i : bp.blocks[k]) {
      if (i < 0 || i >= d) throw Error(ErrorKind::InvalidArgument, "block index out of range");
      if (block_of[i] != -1) throw Error(ErrorKind::InvalidArgument, "blocks overlap");
      block_of[i] = static_cast<Eigen::Index>(k);
      order.push_back(i);
    }
  }
  if (static_cast<Eigen::Index>(order.size()) != d) {
    throw Error(ErrorKind::InvalidArgument, "blocks do not cover every basis vector");
  }
  const ComplexMatrix y = bp.basis.adjoint() * sigma.matrix() * bp.basis;
  double off_block = 0.0;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      if (block_of[i] != block_of[j]) off_block += std::norm(y(i, j));
  off_block = std::sqrt(off_block);
  if (off_block > 1e-12) {
    throw Error(ErrorKind::IncompatibleState,
                "sigma is not block diagonal (off-block mass " + std::to_string(off_block) + ")");
  }
  ConditionalExpectation e(spec, sigma, FaithfulState::maximally_mixed(d), std::move(order),
                           std::move(block_of), ComplexMatrix());
  e.sigma_n_ = to_state(e.restrict_density(sigma.matrix()), ErrorKind::FaithfulnessLost,
                        "restricted sigma");
  return e;
}

StatePair restrict_state(const StatePair& pair, const ConditionalExpectation& e) {
  if (pair.dim() != e.dim() ||
      max_abs_entry(pair.sigma.matrix() - e.sigma().matrix()) > tol::kRecon) {
    throw Error(ErrorKind::IncompatibleState, "conditional expectation built for another sigma");
  }
  return StatePair(to_state(e.restrict_density(pair.rho.matrix()), ErrorKind::FaithfulnessLost,
                            "restricted rho"),
                   e.restricted_sigma());
}

std::string exponent_range(double p) {
  if (p < 0.5) return "(0,1/2)";
  if (p < 1.0) return "[1/2,1)";
  return "(1,inf)";
}

namespace {

void finish(DivergenceReport& rep) {
  for (const auto& e : rep.entries) rep.max_violation = std::max(rep.max_violation, e.violation);
  rep.pass = rep.max_violation <= rep.tolerance;
}

}  // namespace

DivergenceReport dpi_check(const StatePair& pair, const ConditionalExpectation& e,
                           const std::vector<double>& p_grid, double tol) {
  for (double p : p_grid) {
    require_divergence_exponent(p);
    if (p < 0.5) {
      throw Error(ErrorKind::InvalidExponent,
                  "data processing is only asserted for p >= 1/2, got " + std::to_string(p));
    }
  }
  const StatePair restricted = restrict_state(pair, e);
  DivergenceReport rep;
  rep.tolerance = tol;
  for (double p : p_grid) {
    DivergenceEntry entry;
    entry.p = p;
    entry.reference = sandwiched_divergence(pair, p);
    entry.value = sandwiched_divergence(restricted, p);
    entry.slack = entry.reference - entry.value;
    entry.violation = std::max(0.0, -entry.slack);
    entry.range = exponent_range(p);
    rep.entries.push_back(std::move(entry));
  }
  finish(rep);
  return rep;
}

DivergenceReport equality_condition_check(const StatePair& pair_n,
                                          const ConditionalExpectation& e,
                                          const std::vector<double>& p_grid, double tol) {
  for (double p : p_grid) require_divergence_exponent(p);
  if (pair_n.dim() != e.subalgebra_dim() ||
      max_abs_entry(pair_n.sigma.matrix() - e.restricted_sigma().matrix()) > tol::kRecon) {
    throw Error(ErrorKind::IncompatibleState, "pair does not restrict the reference state");
  }
  const StatePair lifted(to_state(e.lift_density(pair_n.rho.matrix()),
                                  ErrorKind::FaithfulnessLost, "lifted rho"),
                         e.sigma());
  DivergenceReport rep;
  rep.tolerance = tol;
  for (double p : p_grid) {
    DivergenceEntry entry;
    entry.p = p;
    entry.reference = sandwiched_divergence(pair_n, p);
    entry.value = sandwiched_divergence(lifted, p);
    entry.slack = entry.value - entry.reference;
    entry.violation = std::abs(entry.slack);
    entry.range = exponent_range(p);
    rep.entries.push_back(std::move(entry));
  }
  finish(rep);
  return rep;
}

DivergenceReport monotonicity_check(const StatePair& pair, const std::vector<double>& p_grid,
                                    double tol) {
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    require_divergence_exponent(p_grid[i]);
    if (i > 0 && !(p_grid[i - 1] < p_grid[i])) {
      throw Error(ErrorKind::InvalidExponent, "p grid must be strictly ascending");
    }
  }
  DivergenceReport rep;
  rep.tolerance = tol;
  double previous = 0.0;
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    DivergenceEntry entry;
    entry.p = p_grid[i];
    entry.value = sandwiched_divergence(pair, entry.p);
    entry.reference = i == 0 ? entry.value : previous;
    entry.slack = entry.value - entry.reference;
    entry.violation = std::max(0.0, -entry.slack);
    entry.range = exponent_range(entry.p);
    previous = entry.value;
    rep.entries.push_back(std::move(entry));
  }
  finish(rep);
  return rep;
}

OperatorMap dpi_map(const ConditionalExpectation& e) {
  const ComplexMatrix s_half = e.sigma().power(0.5);
  const ComplexMatrix n_inv_half = e.restricted_sigma().power(-0.5);
  return OperatorMap::tabulate(e.dim(), e.subalgebra_dim(), [&](const ComplexMatrix& x) {
    return ComplexMatrix(n_inv_half * e.restrict_density(s_half * x * s_half) * n_inv_half);
  });
}

}  // namespace qlp
