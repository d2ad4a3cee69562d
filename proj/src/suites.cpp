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

#include "qlp/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "qlp/error.hpp"
#include "qlp/family.hpp"
#include "qlp/io.hpp"
#include "qlp/random.hpp"
#include "qlp/renyi.hpp"
#include "qlp/schatten.hpp"
#include "qlp/strip.hpp"
#include "qlp/weighted.hpp"

namespace qlp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTiny = 1e-300;
constexpr int kMaxAttempts = 16;

using Index = Eigen::Index;

// ---------------------------------------------------------------------------
// Per-trial bookkeeping.

class Trial {
 public:
  Trial(RandomStream rng, const std::map<std::string, double>& known)
      : rng(rng), known_(known) {}

  void absorb(const ComplexMatrix& m) {
    digest_ = fnv1a({reinterpret_cast<const char*>(m.data()), m.size() * sizeof(Complex)},
                    digest_);
  }

  void check(const std::string& name, double violation) {
    if (!known_.count(name)) throw std::logic_error("unregistered check " + name);
    if (!(violation >= 0.0)) violation = kInf;  // NaN counts as a failure
    auto [it, fresh] = violations_.emplace(name, violation);
    if (!fresh) it->second = std::max(it->second, violation);
    ++counts_[name];
  }

  void value(const std::string& name, double v) { values_[name] = v; }

  TrialRecord record(std::int64_t trial, std::int64_t dim) const {
    TrialRecord r;
    r.trial = trial;
    r.dim = dim;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, digest_);
    r.digest = buf;
    r.values = values_;
    r.violations = violations_;
    for (const auto& [k, v] : violations_) r.max_violation = std::max(r.max_violation, v);
    return r;
  }

  const std::map<std::string, std::int64_t>& counts() const { return counts_; }

  RandomStream rng;

 private:
  const std::map<std::string, double>& known_;
  std::uint64_t digest_ = 0xcbf29ce484222325ull;
  std::map<std::string, double> values_;
  std::map<std::string, double> violations_;
  std::map<std::string, std::int64_t> counts_;
};

double relative_violation(double lhs, double rhs) {
  return std::max(0.0, lhs - rhs) / std::max(std::abs(rhs), kTiny);
}

double relative_defect(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), kTiny});
}

std::string p_label(double p) {
  if (std::isinf(p)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", p);
  return buf;
}

// ---------------------------------------------------------------------------
// Random inputs.

ComplexMatrix test_matrix(Index d, RandomStream& rng) {
  switch (rng.index(4)) {
    case 0: {
      const auto r = static_cast<Index>(1 + rng.index(static_cast<std::size_t>(d)));
      return ginibre(d, r, rng) * ginibre(r, d, rng);
    }
    case 1:
      return ginibre(d, rng) * std::exp(2.0 * rng.normal());
    default:
      return ginibre(d, rng);
  }
}

// Faithful positive matrix with a random overall scale.
HermitianMatrix positive_factor(Index d, RandomStream& rng) {
  const FaithfulState s = sample_faithful_state(d, rng);
  return HermitianMatrix(ComplexMatrix(s.matrix() * (static_cast<double>(d) *
                                                     std::exp(0.5 * rng.normal()))));
}

std::vector<double> probability_vector(Index d, RandomStream& rng) {
  std::vector<double> w(static_cast<std::size_t>(d));
  for (auto& x : w) x = std::exp(rng.normal()) + 1e-3;
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= total;
  return w;
}

FaithfulState state_from(const ComplexMatrix& m) { return FaithfulState(HermitianMatrix(m)); }

std::vector<Index> permutation(Index d, RandomStream& rng) {
  std::vector<Index> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), Index{0});
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.index(i)]);
  return perm;
}

// Random partition of {0..d-1} into `count` non-empty blocks.
std::vector<std::vector<Index>> random_partition(Index d, std::size_t count,
                                                 RandomStream& rng) {
  const std::vector<Index> perm = permutation(d, rng);
  std::vector<std::vector<Index>> blocks(count);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    blocks[i < count ? i : rng.index(count)].push_back(perm[i]);
  }
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  return blocks;
}

// A state that is block diagonal in `basis` for the given partition.
FaithfulState block_state(const ComplexMatrix& basis,
                          const std::vector<std::vector<Index>>& blocks, RandomStream& rng) {
  const Index d = basis.rows();
  const std::vector<double> w = probability_vector(static_cast<Index>(blocks.size()), rng);
  ComplexMatrix inner = ComplexMatrix::Zero(d, d);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto n = static_cast<Index>(blocks[k].size());
    const FaithfulState s = sample_faithful_state(n, rng);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) inner(blocks[k][a], blocks[k][b]) = w[k] * s.matrix()(a, b);
  }
  return state_from(basis * inner * basis.adjoint());
}

// Smallest non-trivial factor of d, or 1 when d is prime.
std::pair<Index, Index> tensor_split(Index d) {
  for (Index a = 2; a * a <= d; ++a)
    if (d % a == 0) return {a, d / a};
  return {1, d};
}

struct Restriction {
  FaithfulState sigma;
  ConditionalExpectation e;
};

Restriction pinching(Index d, std::int64_t trial, Trial& t) {
  const std::size_t count = 1 + t.rng.index(static_cast<std::size_t>(d));
  auto blocks = random_partition(d, count, t.rng);
  if (trial % 2 == 0) {
    // Blocks of eigenvectors of a generic state.
    FaithfulState sigma = sample_faithful_state(d, t.rng);
    const ComplexMatrix basis = sigma.eigen().unitary;
    t.absorb(sigma.matrix());
    auto e = conditional_expectation(BlockPartition{basis, std::move(blocks)}, sigma);
    return {std::move(sigma), std::move(e)};
  }
  const ComplexMatrix basis = haar_unitary(d, t.rng);
  FaithfulState sigma = block_state(basis, blocks, t.rng);
  t.absorb(sigma.matrix());
  auto e = conditional_expectation(BlockPartition{basis, std::move(blocks)}, sigma);
  return {std::move(sigma), std::move(e)};
}

Restriction tensor_slice(Index d, Trial& t) {
  const auto [da, db] = tensor_split(d);
  const FaithfulState sa = sample_faithful_state(da, t.rng);
  const FaithfulState sb = sample_faithful_state(db, t.rng);
  FaithfulState sigma = state_from(kron(sa.matrix(), sb.matrix()));
  t.absorb(sigma.matrix());
  auto e = conditional_expectation(TensorFactor{da, db}, sigma);
  return {std::move(sigma), std::move(e)};
}

std::pair<double, double> distinct_pair(const std::vector<double>& grid, RandomStream& rng) {
  std::vector<double> sorted(grid);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::size_t i = rng.index(sorted.size());
  std::size_t j = rng.index(sorted.size() - 1);
  if (j >= i) ++j;
  return {sorted[std::min(i, j)], sorted[std::max(i, j)]};
}

const std::vector<double> kThetas = {0.25, 0.5, 0.75};

// ---------------------------------------------------------------------------
// Suites. Each body runs one trial at one dimension.

using SuiteBody = std::function<void(const SuiteConfig&, Index, std::int64_t, Trial&)>;

void suite_schatten(const SuiteConfig& cfg, Index d, std::int64_t, Trial& t) {
  const ComplexMatrix x = test_matrix(d, t.rng);
  const ComplexMatrix y = test_matrix(d, t.rng);
  const ComplexMatrix u = haar_unitary(d, t.rng);
  const ComplexMatrix v = haar_unitary(d, t.rng);
  const Complex c = 3.0 * t.rng.complex_normal();
  t.absorb(x);
  t.absorb(y);
  for (double pv : cfg.p_grid) {
    const PExponent p(pv);
    const double nx = schatten_norm(x, p);
    t.value("norm_x[" + p_label(pv) + "]", nx);
    t.check("two_p_identity", std::max(two_p_identity(x, p, true).relative_defect(),
                                       two_p_identity(x, p, false).relative_defect()));
    t.check("unitary_invariance", relative_defect(schatten_norm(u * x * v, p), nx));
    t.check("homogeneity", relative_defect(schatten_norm(c * x, p), std::abs(c) * nx));
    if (pv < 1.0) {
      t.check("quasi_triangle", quasi_triangle(x, y, p).relative_violation());
    } else {
      t.check("triangle", triangle(x, y, p).relative_violation());
    }
    const PExponent q(cfg.p_grid[t.rng.index(cfg.p_grid.size())]);
    t.check("holder", holder(x, y, p, q).relative_violation());
  }
}

void suite_weighted(const SuiteConfig& cfg, Index d, std::int64_t, Trial& t) {
  const WeightedContext ctx(sample_faithful_state(d, t.rng));
  const ComplexMatrix x = test_matrix(d, t.rng);
  t.absorb(ctx.state().matrix());
  t.absorb(x);
  std::vector<double> grid(cfg.p_grid);
  std::sort(grid.begin(), grid.end());
  const ComplexMatrix one = ComplexMatrix::Identity(d, d);
  const double shift = 6.0 * t.rng.uniform() - 3.0;
  const ComplexMatrix flowed = modular_flow(ctx, x, shift);
  const double eta = t.rng.uniform();

  std::vector<double> norms;
  for (double pv : grid) {
    const PExponent p(pv);
    norms.push_back(weighted_norm(ctx, x, p));
    t.value("weighted_norm[" + p_label(pv) + "]", norms.back());
    t.check("unit_norm", std::abs(weighted_norm(ctx, one, p) - 1.0));
    t.check("flow_invariance", relative_defect(weighted_norm(ctx, flowed, p), norms.back()));
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const PExponent p0(grid[i]);
      const PExponent p1(grid[j]);
      t.check("monotonicity", relative_violation(norms[i], norms[j]));
      const double a0 = asymmetric_weighted_norm(ctx, x, p0, eta);
      const double a1 = asymmetric_weighted_norm(ctx, x, p1, eta);
      for (double theta : kThetas) {
        const PExponent pt = p_theta(p0, p1, theta);
        t.check("interpolation",
                relative_violation(weighted_norm(ctx, x, pt),
                                   std::pow(norms[i], 1.0 - theta) * std::pow(norms[j], theta)));
        t.check("asymmetric_interpolation",
                relative_violation(asymmetric_weighted_norm(ctx, x, pt, eta),
                                   std::pow(a0, 1.0 - theta) * std::pow(a1, theta)));
      }
    }
  }
}

void suite_modular_flow(const SuiteConfig& cfg, Index d, std::int64_t, Trial& t) {
  const WeightedContext ctx(sample_faithful_state(d, t.rng));
  const ComplexMatrix x = test_matrix(d, t.rng);
  t.absorb(ctx.state().matrix());
  t.absorb(x);
  for (double p : cfg.p_grid) {
    const ComplexMatrix lhs = x * ctx.state().power(1.0 / p);
    const double scale = operator_norm(lhs);
    for (double eta : {0.0, 0.4, 1.0}) {
      const ComplexMatrix rhs = ctx.state().power((1.0 - eta) / p) *
                                modular_flow(ctx, x, Complex(0.0, (1.0 - eta) / p)) *
                                ctx.state().power(eta / p);
      t.check("flow_identity", operator_norm(lhs - rhs) / std::max(scale, kTiny));
    }
  }
}

void suite_three_lines(const SuiteConfig& cfg, Index d, std::int64_t, Trial& t) {
  auto [p0v, p1v] = distinct_pair(cfg.p_grid, t.rng);
  const double theta = kThetas[t.rng.index(kThetas.size())];
  const WeightedContext ctx(sample_faithful_state(d, t.rng));
  const ComplexMatrix x = test_matrix(d, t.rng);
  const HermitianMatrix a = positive_factor(d, t.rng);
  const ComplexMatrix b = ginibre(d, t.rng);
  const HermitianMatrix c = positive_factor(d, t.rng);
  for (const ComplexMatrix* m : {&ctx.state().matrix(), &x, &a.matrix(), &b, &c.matrix()}) {
    t.absorb(*m);
  }
  const std::vector<double> grid = default_t_grid();
  const PExponent p0(p0v);
  const PExponent p1(p1v);
  t.value("p0", p0v);
  t.value("p1", p1v);
  t.value("theta", theta);

  auto run = [&](const std::string& name, const AnalyticFamily& fam, const NormWeight& w,
                 bool swap) {
    const CertificateReport rep =
        swap ? three_lines_check(fam, w, p1, p0, theta, grid)
             : three_lines_check(fam, w, p0, p1, theta, grid);
    t.check("three_lines", rep.sound ? std::max(0.0, -rep.relative_slack) : kInf);
    t.value("slack." + name, rep.relative_slack);
    return rep;
  };
  const bool swap = t.rng.index(2) == 1;
  const AnalyticFamily constant = AnalyticFamily::constant(x);
  run("constant", constant, TraceWeight{}, swap);
  run("constant_weighted", constant, ctx, swap);
  const auto az = AnalyticFamily::power(a, Affine{});
  const auto cz = AnalyticFamily::power(c, Affine{});
  run("power_left", AnalyticFamily::product({az, AnalyticFamily::constant(b)}), TraceWeight{},
      swap);
  run("power_both", AnalyticFamily::product({az, AnalyticFamily::constant(b), cz}),
      TraceWeight{}, swap);
  const CertificateReport w =
      run("witness", extremal_witness(ctx, x, p0, p1, theta), TraceWeight{}, false);
  t.check("witness_tightness", std::abs(w.relative_slack));
}

void suite_witness(const SuiteConfig& cfg, Index d, std::int64_t, Trial& t) {
  auto [p0v, p1v] = distinct_pair(cfg.p_grid, t.rng);
  const double theta = kThetas[t.rng.index(kThetas.size())];
  const WeightedContext ctx(sample_faithful_state(d, t.rng));
  const ComplexMatrix x = test_matrix(d, t.rng);
  t.absorb(ctx.state().matrix());
  t.absorb(x);
  const PExponent p0(p0v);
  const PExponent p1(p1v);
  const PExponent pt = p_theta(p0, p1, theta);
  const ComplexMatrix y = symmetric_embedding(ctx, x, pt);
  const double ny = schatten_norm(y, pt);
  const AnalyticFamily w = extremal_witness(ctx, x, p0, p1, theta);
  const AnalyticFamily unit = extremal_witness(ctx, ComplexMatrix(x / ny), p0, p1, theta);

  t.check("reassembly", max_abs_entry(w.evaluate(theta) - y) / max_abs_entry(y));
  const double expect0 = std::pow(ny, pt.value() * p0.reciprocal());
  const double expect1 = std::pow(ny, pt.value() * p1.reciprocal());
  double lo0 = kInf, hi0 = 0.0, lo1 = kInf, hi1 = 0.0;
  for (double s : {-2.0, -0.7, 0.0, 0.7, 2.0}) {
    const double n0 = schatten_norm(w.evaluate({0.0, s}), p0);
    const double n1 = schatten_norm(w.evaluate({1.0, s}), p1);
    t.check("boundary_norm", std::max(relative_defect(n0, expect0), relative_defect(n1, expect1)));
    t.check("normalized_boundary",
            std::max(std::abs(schatten_norm(unit.evaluate({0.0, s}), p0) - 1.0),
                     std::abs(schatten_norm(unit.evaluate({1.0, s}), p1) - 1.0)));
    lo0 = std::min(lo0, n0);
    hi0 = std::max(hi0, n0);
    lo1 = std::min(lo1, n1);
    hi1 = std::max(hi1, n1);
  }
  t.check("t_invariance", std::max((hi0 - lo0) / hi0, (hi1 - lo1) / hi1));
  const std::vector<double> grid = default_t_grid();
  const CertificateReport rep = three_lines_check(w, TraceWeight{}, p0, p1, theta, grid);
  t.check("tightness", rep.sound ? std::abs(rep.relative_slack) : kInf);
  t.value("norm_y", ny);
  t.value("slack", rep.relative_slack);
  t.value("p0", p0v);
  t.value("p1", p1v);
  t.value("theta", theta);
}

QuadratureSpec quadrature(const SuiteConfig& cfg) {
  QuadratureSpec q;
  q.half_width = cfg.quadrature_half_width;
  q.step = cfg.quadrature_step;
  return q;
}

void suite_hirschman(const SuiteConfig& cfg, Index d, std::int64_t, Trial& t) {
  const QuadratureSpec quad = quadrature(cfg);
  for (double theta : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    t.check("kernel_mass", std::abs(hirschman_kernel_mass(theta, quad) - 1.0));
  }
  t.check("kernel_center", std::abs(hirschman_kernel(0.5, 0.0) - 1.0));

  auto [p0v, p1v] = distinct_pair(cfg.p_grid, t.rng);
  if (t.rng.index(2) == 1) std::swap(p0v, p1v);
  const double theta = kThetas[t.rng.index(kThetas.size())];
  const PExponent p0(p0v);
  const PExponent p1(p1v);
  const ComplexMatrix x = test_matrix(d, t.rng);
  const HermitianMatrix a = positive_factor(d, t.rng);
  const ComplexMatrix b = ginibre(d, t.rng);
  const HermitianMatrix c = positive_factor(d, t.rng);
  for (const ComplexMatrix* m : {&x, &a.matrix(), &b, &c.matrix()}) t.absorb(*m);
  const std::vector<double> grid = default_t_grid();

  auto run = [&](const std::string& name, const AnalyticFamily& fam) {
    const CertificateReport h = hirschman_check(fam, p0, p1, theta, quad);
    t.check("hirschman", h.sound ? std::max(0.0, -h.slack) : kInf);
    t.value("slack." + name, h.slack);
    // On t-invariant families the kernel average is exactly the log of the
    // three-lines bound.
    const CertificateReport tl = three_lines_check(fam, TraceWeight{}, p0, p1, theta, grid);
    const double log_bound =
        (1.0 - theta) * std::log(tl.profile->sup0) + theta * std::log(tl.profile->sup1);
    t.check("hirschman_vs_three_lines", std::abs(h.rhs - log_bound));
  };
  const auto az = AnalyticFamily::power(a, Affine{});
  run("constant", AnalyticFamily::constant(x));
  run("power_left", AnalyticFamily::product({az, AnalyticFamily::constant(b)}));
  run("power_both",
      AnalyticFamily::product({az, AnalyticFamily::constant(b), AnalyticFamily::power(c, Affine{})}));
}

void suite_product_power(const SuiteConfig& cfg, Index d, std::int64_t trial, Trial& t) {
  const QuadratureSpec quad = quadrature(cfg);
  const auto n = static_cast<std::size_t>(1 + trial % 3);
  std::vector<HermitianMatrix> factors;
  for (std::size_t k = 0; k < n; ++k) {
    factors.push_back(positive_factor(d, t.rng));
    t.absorb(factors.back().matrix());
  }
  const ComplexMatrix u = haar_unitary(d, t.rng);
  std::vector<HermitianMatrix> commuting;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> diag = probability_vector(d, t.rng);
    for (auto& v : diag) v *= static_cast<double>(d) * std::exp(0.5 * t.rng.normal());
    const HermitianMatrix dm = HermitianMatrix::diagonal(diag);
    commuting.emplace_back(ComplexMatrix(u * dm.matrix() * u.adjoint()));
    t.absorb(commuting.back().matrix());
  }
  t.value("factors", static_cast<double>(n));

  const ProductPowerProfile general(factors, quad);
  const ProductPowerProfile diagonal(commuting, quad);
  for (double r : {0.3, 0.5, 1.0}) {
    for (double pv : cfg.p_grid) {
      const PExponent p(pv);
      const CertificateReport rep = general.check(r, p);
      t.check("cor37", std::max(0.0, -rep.slack));
      if (n == 1) t.check("cor37_single", std::abs(rep.slack));
      t.check("cor37_commuting", std::abs(diagonal.check(r, p).slack));
      t.value("slack[r=" + p_label(r) + ",p=" + p_label(pv) + "]", rep.slack);
    }
  }
}

// Spectrum of m ~ u diag(.) u* as actually stored: Rayleigh quotients of the
// columns of u in extended precision. These differ from the intended vector by
// the rounding of m, which shifts a divergence near zero by a large relative
// amount; the quotients are exact to second order in that rounding.
std::vector<long double> stored_spectrum(const ComplexMatrix& m, const ComplexMatrix& u) {
  using Wide = std::complex<long double>;
  std::vector<long double> out(static_cast<std::size_t>(u.cols()));
  for (Index i = 0; i < u.cols(); ++i) {
    Wide num = 0.0L;
    long double den = 0.0L;
    for (Index r = 0; r < u.rows(); ++r) {
      const Wide ur(u(r, i).real(), u(r, i).imag());
      den += std::norm(ur);
      for (Index c = 0; c < u.rows(); ++c) {
        num += std::conj(ur) * Wide(m(r, c).real(), m(r, c).imag()) *
               Wide(u(c, i).real(), u(c, i).imag());
      }
    }
    out[static_cast<std::size_t>(i)] = num.real() / den;
  }
  return out;
}

// Extended precision: nearly equal pairs have divergences far below one, so
// the sum sits within rounding of 1 and double would cost relative accuracy.
double classical_divergence(const std::vector<long double>& a, const std::vector<long double>& b,
                            double p) {
  const long double lp = p;
  long double acc = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::pow(a[i], lp) * std::pow(b[i], 1.0L - lp);
  return static_cast<double>(std::log(acc) / (lp - 1.0L));
}

void suite_divergence(const SuiteConfig& cfg, Index d, std::int64_t, Trial& t) {
  // Commuting pair against the classical formula.
  const ComplexMatrix u = haar_unitary(d, t.rng);
  const std::vector<double> a = probability_vector(d, t.rng);
  const std::vector<double> b = probability_vector(d, t.rng);
  const FaithfulState ca = state_from(u * HermitianMatrix::diagonal(a).matrix() * u.adjoint());
  const FaithfulState cb = state_from(u * HermitianMatrix::diagonal(b).matrix() * u.adjoint());
  t.absorb(ca.matrix());
  t.absorb(cb.matrix());

  const FaithfulState rho = sample_faithful_state(d, t.rng);
  const FaithfulState sigma = sample_faithful_state(d, t.rng);
  const FaithfulState rho2 = sample_faithful_state(2, t.rng);
  const FaithfulState sigma2 = sample_faithful_state(2, t.rng);
  const ComplexMatrix v = haar_unitary(d, t.rng);
  for (const auto* s : {&rho, &sigma, &rho2, &sigma2}) t.absorb(s->matrix());
  const FaithfulState rho_v = state_from(v * rho.matrix() * v.adjoint());
  const FaithfulState sigma_v = state_from(v * sigma.matrix() * v.adjoint());
  const FaithfulState rho_t = state_from(kron(rho.matrix(), rho2.matrix()));
  const FaithfulState sigma_t = state_from(kron(sigma.matrix(), sigma2.matrix()));

  const FaithfulState fix_rho = FaithfulState(HermitianMatrix::diagonal(std::vector{0.5, 0.5}));
  const FaithfulState fix_sigma =
      FaithfulState(HermitianMatrix::diagonal(std::vector{1.0 / 3.0, 2.0 / 3.0}));
  t.check("fixture", std::abs(sandwiched_divergence(fix_rho, fix_sigma, 2.0) - std::log(9.0 / 8.0)));

  const std::vector<long double> sa = stored_spectrum(ca.matrix(), u);
  const std::vector<long double> sb = stored_spectrum(cb.matrix(), u);
  for (double p : cfg.p_grid) {
    const double exact = classical_divergence(sa, sb, p);
    t.value("classical[" + p_label(p) + "]", exact);
    t.check("classical", std::abs(sandwiched_divergence(ca, cb, p) - exact) /
                             std::max(std::abs(exact), kTiny));
    const double dv = sandwiched_divergence(rho, sigma, p);
    t.value("divergence[" + p_label(p) + "]", dv);
    t.check("self_divergence", std::abs(sandwiched_divergence(rho, rho, p)));
    t.check("unitary_covariance", std::abs(sandwiched_divergence(rho_v, sigma_v, p) - dv));
    t.check("tensor_additivity", std::abs(sandwiched_divergence(rho_t, sigma_t, p) - dv -
                                          sandwiched_divergence(rho2, sigma2, p)));
  }
}

void suite_renyi_mono(const SuiteConfig& cfg, Index d, std::int64_t, Trial& t) {
  const StatePair pair(sample_faithful_state(d, t.rng), sample_faithful_state(d, t.rng));
  t.absorb(pair.rho.matrix());
  t.absorb(pair.sigma.matrix());
  const DivergenceReport rep = monotonicity_check(pair, cfg.p_grid);
  for (const auto& e : rep.entries) {
    t.check("monotonicity", e.violation);
    t.value("divergence[" + p_label(e.p) + "]", e.value);
  }
}

void dpi_for(const std::string& kind, const Restriction& r, const SuiteConfig& cfg, Trial& t) {
  const FaithfulState rho = sample_faithful_state(r.sigma.dim(), t.rng);
  t.absorb(rho.matrix());
  const DivergenceReport rep = dpi_check(StatePair(rho, r.sigma), r.e, cfg.p_grid);
  for (const auto& e : rep.entries) {
    t.check("dpi" + e.range, e.violation);
    t.value(kind + ".slack[" + p_label(e.p) + "]", e.slack);
  }
  const OperatorMap s = dpi_map(r.e);
  const double ratio =
      operator_interp_norm(s, WeightedContext(r.sigma), WeightedContext(r.e.restricted_sigma()),
                           PExponent(1.0), PExponent(1.0), 8, t.rng());
  t.check("map_contraction", std::max(0.0, ratio - 1.0));
  const Index n = r.e.subalgebra_dim();
  t.check("map_unital",
          max_abs_entry(s(ComplexMatrix::Identity(r.sigma.dim(), r.sigma.dim())) -
                        ComplexMatrix::Identity(n, n)));
}

void suite_dpi(const SuiteConfig& cfg, Index d, std::int64_t trial, Trial& t) {
  dpi_for("pinching", pinching(d, trial, t), cfg, t);
  dpi_for("tensor", tensor_slice(d, t), cfg, t);
}

void suite_dpi_equality(const SuiteConfig& cfg, Index d, std::int64_t, Trial& t) {
  {
    const Restriction r = tensor_slice(d, t);
    const FaithfulState rho_a = sample_faithful_state(r.e.subalgebra_dim(), t.rng);
    t.absorb(rho_a.matrix());
    const DivergenceReport rep =
        equality_condition_check(StatePair(rho_a, r.e.restricted_sigma()), r.e, cfg.p_grid);
    for (const auto& e : rep.entries) {
      t.check("equality_tensor", e.violation);
      t.value("tensor.defect[" + p_label(e.p) + "]", e.slack);
    }
  }
  {
    const ComplexMatrix basis = haar_unitary(d, t.rng);
    auto blocks = random_partition(d, 2, t.rng);
    const FaithfulState sigma = block_state(basis, blocks, t.rng);
    t.absorb(sigma.matrix());
    const ConditionalExpectation e =
        conditional_expectation(BlockPartition{basis, blocks}, sigma);
    // psi_N in N's representation: the blocks in listed order.
    const double w = 0.1 + 0.8 * t.rng.uniform();
    ComplexMatrix rho_n = ComplexMatrix::Zero(d, d);
    Index offset = 0;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      const auto n = static_cast<Index>(blocks[k].size());
      rho_n.block(offset, offset, n, n) =
          (k == 0 ? w : 1.0 - w) * sample_faithful_state(n, t.rng).matrix();
      offset += n;
    }
    t.absorb(rho_n);
    const DivergenceReport rep = equality_condition_check(
        StatePair(state_from(rho_n), e.restricted_sigma()), e, cfg.p_grid);
    for (const auto& entry : rep.entries) {
      t.check("equality_block", entry.violation);
      t.value("block.defect[" + p_label(entry.p) + "]", entry.slack);
    }
  }
}

void suite_riesz_thorin(const SuiteConfig& cfg, Index d, std::int64_t trial, Trial& t) {
  const Restriction r = trial % 2 == 0 ? pinching(d, trial / 2, t) : tensor_slice(d, t);
  const OperatorMap s = dpi_map(r.e);
  const WeightedContext src(r.sigma);
  const WeightedContext dst(r.e.restricted_sigma());
  auto [p0v, p1v] = distinct_pair(cfg.p_grid, t.rng);
  const double theta = kThetas[t.rng.index(kThetas.size())];
  const PExponent pt = p_theta(PExponent(p0v), PExponent(p1v), theta);
  // Conditional expectations are contractions at both endpoints, so the
  // interpolated bound is M0^{1-theta} M1^theta = 1.
  for (int k = 0; k < 4; ++k) {
    const ComplexMatrix x = test_matrix(d, t.rng);
    t.absorb(x);
    t.check("riesz_thorin",
            relative_violation(weighted_norm(dst, s(x), pt), weighted_norm(src, x, pt)));
  }
  const double lower = operator_interp_norm(s, src, dst, pt, pt, 8, t.rng());
  t.check("interp_lower_bound", std::max(0.0, lower - 1.0));
  t.value("interp_lower", lower);
}

// ---------------------------------------------------------------------------
// Registry.

struct SuiteInfo {
  std::string name;
  std::vector<std::int64_t> dims;
  std::int64_t trials;
  std::vector<double> p_grid;
  std::map<std::string, double> tolerances;
  SuiteBody body;
};

const std::vector<SuiteInfo>& registry() {
  static const std::vector<SuiteInfo> suites = {
      {"schatten",
       {2, 3, 5, 8},
       1000,
       {0.25, 0.5, 0.9, 1.0, 2.0, 4.0, kInf},
       {{"holder", 1e-9},
        {"quasi_triangle", 1e-9},
        {"triangle", 1e-9},
        {"two_p_identity", 1e-9},
        {"unitary_invariance", 1e-9},
        {"homogeneity", 1e-12}},
       suite_schatten},
      {"weighted",
       {2, 3, 4, 5},
       500,
       {0.3, 0.5, 1.0, 2.0, 4.0, kInf},
       {{"monotonicity", 1e-9},
        {"interpolation", 1e-9},
        {"asymmetric_interpolation", 1e-9},
        {"flow_invariance", 1e-9},
        {"unit_norm", 1e-10}},
       suite_weighted},
      {"modular_flow", {2, 3, 4}, 200, {0.5, 2.0, 3.0}, {{"flow_identity", 1e-8}},
       suite_modular_flow},
      {"three_lines",
       {2, 3, 4},
       300,
       {0.3, 0.5, 1.0, 2.0, 4.0, kInf},
       {{"three_lines", 1e-8}, {"witness_tightness", 1e-6}},
       suite_three_lines},
      {"witness",
       {2, 3, 4},
       100,
       {0.3, 0.5, 1.0, 2.0, 4.0, kInf},
       {{"reassembly", 1e-10},
        {"boundary_norm", 1e-9},
        {"t_invariance", 1e-9},
        {"normalized_boundary", 1e-9},
        {"tightness", 1e-8}},
       suite_witness},
      {"hirschman",
       {2, 3},
       20,
       {0.5, 1.0, 2.0, 4.0, kInf},
       {{"kernel_mass", 1e-8},
        {"kernel_center", 1e-12},
        {"hirschman", 1e-6},
        {"hirschman_vs_three_lines", 1e-8}},
       suite_hirschman},
      {"product_power",
       {2, 3},
       200,
       {0.5, 1.0, 2.0},
       {{"cor37", 1e-6}, {"cor37_single", 1e-6}, {"cor37_commuting", 1e-6}},
       suite_product_power},
      {"divergence",
       {2, 3, 4},
       500,
       {0.25, 0.5, 2.0, 3.0, 10.0},
       {{"classical", 1e-9},
        {"fixture", 1e-12},
        {"tensor_additivity", 1e-9},
        {"unitary_covariance", 1e-9},
        {"self_divergence", 1e-10}},
       suite_divergence},
      {"renyi_mono",
       {3},
       300,
       {0.1, 0.2, 0.3, 0.5, 0.7, 0.9, 1.1, 1.5, 2.0, 3.0, 5.0, 10.0},
       {{"monotonicity", 1e-8}},
       suite_renyi_mono},
      {"dpi",
       {3, 4},
       500,
       {0.5, 0.75, 1.5, 2.0, 5.0},
       {{"dpi[1/2,1)", 1e-8}, {"dpi(1,inf)", 1e-8}, {"map_contraction", 1e-9},
        {"map_unital", 1e-10}},
       suite_dpi},
      {"dpi_equality",
       {4, 6},
       200,
       {0.1, 0.25, 0.5, 0.75, 2.0, 10.0},
       {{"equality_tensor", 1e-9}, {"equality_block", 1e-9}},
       suite_dpi_equality},
      {"riesz_thorin",
       {3, 4},
       200,
       {1.0, 2.0, 4.0, kInf},
       {{"riesz_thorin", 1e-9}, {"interp_lower_bound", 1e-9}},
       suite_riesz_thorin},
  };
  return suites;
}

const SuiteInfo& lookup(std::string_view name) {
  for (const auto& s : registry())
    if (s.name == name) return s;
  throw Error(ErrorKind::ConfigError, "suite: unknown suite '" + std::string(name) + "'");
}

void config_error(const std::string& msg) { throw Error(ErrorKind::ConfigError, msg); }

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : registry()) out.push_back(s.name);
    return out;
  }();
  return names;
}

SuiteConfig default_config(std::string_view suite) {
  const SuiteInfo& info = lookup(suite);
  SuiteConfig cfg;
  cfg.suite = info.name;
  cfg.dims = info.dims;
  cfg.trials = info.trials;
  cfg.p_grid = info.p_grid;
  return cfg;
}

const std::map<std::string, double>& default_tolerances(std::string_view suite) {
  return lookup(suite).tolerances;
}

std::map<std::string, double> effective_tolerances(const SuiteConfig& cfg) {
  std::map<std::string, double> tol = default_tolerances(cfg.suite);
  for (const auto& [k, v] : cfg.tolerance_overrides) tol[k] = v;
  return tol;
}

void validate(const SuiteConfig& cfg) {
  const SuiteInfo& info = lookup(cfg.suite);
  const std::string& s = info.name;
  if (cfg.trials < 1) config_error("trials: must be at least 1");
  if (cfg.dims.empty()) config_error("dims: at least one dimension is required");
  for (auto d : cfg.dims) {
    if (d < 1) config_error("dims: " + std::to_string(d) + " is not a positive dimension");
    if (d > 64) config_error("dims: " + std::to_string(d) + " exceeds the supported maximum 64");
    if (s == "dpi_equality" && d < 2) {
      config_error("dims: dpi_equality needs dimension at least 2 for a two-block partition");
    }
  }
  if (cfg.p_grid.empty()) config_error("p_grid: must not be empty");
  for (std::size_t i = 0; i < cfg.p_grid.size(); ++i) {
    const double p = cfg.p_grid[i];
    const std::string where = "p_grid: " + p_label(p);
    if (!(p > 0.0)) config_error(where + " is not positive");
    const bool divergence = s == "divergence" || s == "renyi_mono" || s == "dpi" ||
                            s == "dpi_equality";
    if ((divergence || s == "modular_flow") && std::isinf(p)) {
      config_error(where + " must be finite for suite " + s);
    }
    if (divergence && p == 1.0) config_error(where + ": the divergence is not defined at p = 1");
    if (s == "dpi" && p < 0.5) {
      config_error(where + " is outside the range where data processing is asserted, "
                           "[1/2,1) and (1,inf)");
    }
    if (s == "riesz_thorin" && p < 1.0) {
      config_error(where + ": contractivity of conditional expectations needs p >= 1");
    }
    if (s == "renyi_mono" && i > 0 && !(cfg.p_grid[i - 1] < p)) {
      config_error("p_grid: must be strictly ascending for renyi_mono");
    }
  }
  const bool needs_pair =
      s == "three_lines" || s == "witness" || s == "hirschman" || s == "riesz_thorin";
  if (needs_pair) {
    std::vector<double> sorted(cfg.p_grid);
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) - sorted.begin() < 2) {
      config_error("p_grid: suite " + s + " needs at least two distinct exponents");
    }
  }
  for (const auto& [k, v] : cfg.tolerance_overrides) {
    if (!info.tolerances.count(k)) {
      config_error("tolerance_overrides: suite " + s + " has no check named '" + k + "'");
    }
    if (!(v >= 0.0) || std::isinf(v)) {
      config_error("tolerance_overrides: " + k + " must be a finite non-negative number");
    }
  }
  const double t = cfg.quadrature_half_width;
  const double h = cfg.quadrature_step;
  if (!(t >= std::log(4.0) / M_PI) || std::isinf(t)) {
    config_error("quadrature.T: must be at least ln(4)/pi");
  }
  if (!(h > 0.0) || std::abs(2.0 * t / h - std::round(2.0 * t / h)) > 1e-9 * (2.0 * t / h)) {
    config_error("quadrature.step: must be positive and divide 2T");
  }
  if (2.0 * t / h > 1e6) config_error("quadrature.step: more than 10^6 nodes");
  if (cfg.threads < 0) config_error("threads: must be non-negative");
}

nlohmann::json config_to_json(const SuiteConfig& cfg) {
  nlohmann::json j = nlohmann::json::object();
  j["suite"] = cfg.suite;
  j["dims"] = cfg.dims;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  nlohmann::json grid = nlohmann::json::array();
  for (double p : cfg.p_grid) grid.push_back(double_to_json(p));
  j["p_grid"] = std::move(grid);
  nlohmann::json tol = nlohmann::json::object();
  for (const auto& [k, v] : effective_tolerances(cfg)) tol[k] = v;
  j["tolerances"] = std::move(tol);
  nlohmann::json overrides = nlohmann::json::object();
  for (const auto& [k, v] : cfg.tolerance_overrides) overrides[k] = v;
  j["tolerance_overrides"] = std::move(overrides);
  j["quadrature"] = {{"T", cfg.quadrature_half_width}, {"step", cfg.quadrature_step}};
  return j;
}

VerificationReport run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const SuiteInfo& info = lookup(cfg.suite);
  const std::map<std::string, double> tolerances = effective_tolerances(cfg);

  struct Item {
    std::int64_t dim;
    std::int64_t trial;
  };
  std::vector<Item> items;
  for (auto d : cfg.dims)
    for (std::int64_t k = 0; k < cfg.trials; ++k) items.push_back({d, k});

  std::vector<TrialRecord> records(items.size());
  std::vector<std::map<std::string, std::int64_t>> counts(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      const Item& it = items[i];
      try {
        for (int attempt = 0;; ++attempt) {
          Trial t(RandomStream::for_trial(cfg.seed, info.name, static_cast<std::uint64_t>(it.dim),
                                          static_cast<std::uint64_t>(it.trial),
                                          static_cast<std::uint64_t>(attempt)),
                  tolerances);
          try {
            info.body(cfg, static_cast<Index>(it.dim), it.trial, t);
          } catch (const Error& e) {
            // A restricted state that lost faithfulness rejects the draw.
            if (e.kind() == ErrorKind::FaithfulnessLost && attempt + 1 < kMaxAttempts) continue;
            throw;
          }
          if (attempt > 0) t.value("attempts", attempt + 1);
          records[i] = t.record(it.trial, it.dim);
          counts[i] = t.counts();
          break;
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  std::size_t threads = cfg.threads > 0 ? static_cast<std::size_t>(cfg.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, items.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  VerificationReport report;
  report.suite = info.name;
  report.config = config_to_json(cfg);
  for (const auto& [name, tol] : tolerances) {
    CheckSummary c;
    c.name = name;
    c.tolerance = tol;
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (auto it = records[i].violations.find(name); it != records[i].violations.end()) {
        c.max_violation = std::max(c.max_violation, it->second);
      }
      if (auto it = counts[i].find(name); it != counts[i].end()) c.count += it->second;
    }
    c.pass = c.max_violation <= c.tolerance;
    report.max_violation = std::max(report.max_violation, c.max_violation);
    report.pass = report.pass && c.pass;
    report.checks.push_back(std::move(c));
  }
  report.trials = std::move(records);
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qlp
