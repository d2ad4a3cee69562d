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

#ifndef QLP_RENYI_HPP
#define QLP_RENYI_HPP

#include <string>
#include <variant>
#include <vector>

#include "qlp/spectral.hpp"
#include "qlp/weighted.hpp"

namespace qlp {

// Two faithful states of the same dimension: rho is the density of psi and
// sigma the density of the reference state phi.
struct StatePair {
  StatePair(FaithfulState rho_, FaithfulState sigma_);

  Eigen::Index dim() const noexcept { return rho.dim(); }

  FaithfulState rho;
  FaithfulState sigma;
};

// (1/(p-1)) log tr[(sigma^{(1-p)/2p} rho sigma^{(1-p)/2p})^p] for p in
// (0, 1) or (1, inf).
double sandwiched_divergence(const FaithfulState& rho, const FaithfulState& sigma, double p);
double sandwiched_divergence(const StatePair& pair, double p);

// The block-diagonal algebra sum_k P_k M P_k, where P_k projects onto the
// columns of `basis` listed in blocks[k]. sigma must be block diagonal in
// that basis.
struct BlockPartition {
  ComplexMatrix basis;
  std::vector<std::vector<Eigen::Index>> blocks;
};

// M_A (x) 1 inside M_A (x) M_B. sigma must factor as sigma_A (x) sigma_B.
// With dim_a = 1 this is the scalar algebra and E(x) = tr(sigma x) 1.
struct TensorFactor {
  Eigen::Index dim_a = 1;
  Eigen::Index dim_b = 1;
};

using SubalgebraSpec = std::variant<BlockPartition, TensorFactor>;

// The sigma-preserving conditional expectation onto a subalgebra N, plus the
// trace-compatible identification of densities on N. N is represented as
// the direct sum of its blocks (in the listed order) or as the A factor.
class ConditionalExpectation {
 public:
  ComplexMatrix operator()(const ComplexMatrix& x) const;

  // Density of psi restricted to N, in N's own representation. Linear, so it
  // also serves as the trace-preserving map from M onto N.
  ComplexMatrix restrict_density(const ComplexMatrix& rho) const;
  // Density of psi_N o E on M.
  ComplexMatrix lift_density(const ComplexMatrix& rho_n) const;

  const SubalgebraSpec& spec() const noexcept { return spec_; }
  const FaithfulState& sigma() const noexcept { return sigma_; }
  const FaithfulState& restricted_sigma() const noexcept { return sigma_n_; }
  Eigen::Index dim() const noexcept { return sigma_.dim(); }
  Eigen::Index subalgebra_dim() const noexcept { return sigma_n_.dim(); }

 private:
  friend ConditionalExpectation conditional_expectation(const SubalgebraSpec& spec,
                                                        const FaithfulState& sigma);
  ConditionalExpectation(SubalgebraSpec spec, FaithfulState sigma, FaithfulState sigma_n,
                         std::vector<Eigen::Index> order, std::vector<Eigen::Index> block_of,
                         ComplexMatrix sigma_b);

  SubalgebraSpec spec_;
  FaithfulState sigma_;
  FaithfulState sigma_n_;
  std::vector<Eigen::Index> order_;     // blocks concatenated
  std::vector<Eigen::Index> block_of_;  // basis index -> block
  ComplexMatrix sigma_b_;               // tensor case only
};

// Throws IncompatibleState if sigma is not block diagonal (or not a product)
// for the given spec, and InvalidArgument if the spec itself is malformed.
ConditionalExpectation conditional_expectation(const SubalgebraSpec& spec,
                                               const FaithfulState& sigma);

// (rho_N, sigma_N). Throws FaithfulnessLost if rho_N has an eigenvalue below
// the faithfulness floor.
StatePair restrict_state(const StatePair& pair, const ConditionalExpectation& e);

// Partial traces of an operator on C^{dim_a} (x) C^{dim_b}.
ComplexMatrix partial_trace_b(const ComplexMatrix& x, Eigen::Index dim_a, Eigen::Index dim_b);
ComplexMatrix partial_trace_a(const ComplexMatrix& x, Eigen::Index dim_a, Eigen::Index dim_b);

// "(0,1/2)", "[1/2,1)" or "(1,inf)".
std::string exponent_range(double p);

struct DivergenceEntry {
  double p = 0.0;
  double reference = 0.0;  // the value the entry is compared against
  double value = 0.0;
  double slack = 0.0;      // signed; negative means the inequality failed
  double violation = 0.0;
  std::string range;
};

struct DivergenceReport {
  std::vector<DivergenceEntry> entries;
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

// D_p(rho||sigma) - D_p(rho_N||sigma_N) >= -tol for p in [1/2, 1) or (1, inf).
DivergenceReport dpi_check(const StatePair& pair, const ConditionalExpectation& e,
                           const std::vector<double>& p_grid, double tol = 1e-8);

// Lifts psi_N to psi_N o E and checks |D_p(lift||sigma) - D_p(pair_n)| <= tol.
// Any p in (0, 1) or (1, inf) is allowed.
DivergenceReport equality_condition_check(const StatePair& pair_n,
                                          const ConditionalExpectation& e,
                                          const std::vector<double>& p_grid, double tol = 1e-9);

// D_{p_i} <= D_{p_{i+1}} + tol along an ascending grid avoiding 1.
DivergenceReport monotonicity_check(const StatePair& pair, const std::vector<double>& p_grid,
                                    double tol = 1e-8);

// x -> sigma_N^{-1/2} T(sigma^{1/2} x sigma^{1/2}) sigma_N^{-1/2}, where T is
// restriction of densities. Contractive from L_1(phi) to L_1(phi_N), unital.
OperatorMap dpi_map(const ConditionalExpectation& e);

}  // namespace qlp

#endif  // QLP_RENYI_HPP
