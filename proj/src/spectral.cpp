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

#include <algorithm>
#include <cmath>
#include <string>

#include "qlp/error.hpp"

namespace qlp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonHermitian: return "NonHermitian";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotFaithful: return "NotFaithful";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::SingularPower: return "SingularPower";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::OutsideStrip: return "OutsideStrip";
    case ErrorKind::LogOfZero: return "LogOfZero";
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::IncompatibleState: return "IncompatibleState";
    case ErrorKind::FaithfulnessLost: return "FaithfulnessLost";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

void require_square_finite(const ComplexMatrix& m, std::string_view what) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " must be a non-empty square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + " has non-finite entries");
  }
}

double max_abs_entry(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  require_square_finite(m, "Hermitian matrix");
  const double defect = max_abs_entry(m - m.adjoint());
  const double scale = max_abs_entry(m);
  if (defect > tol::kHermitian * scale) {
    throw Error(ErrorKind::NonHermitian,
                "Hermiticity defect " + std::to_string(defect) +
                    " exceeds tolerance");
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index dim) {
  return HermitianMatrix(Unchecked{}, ComplexMatrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> entries) {
  ComplexMatrix m = ComplexMatrix::Zero(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return HermitianMatrix(m);
}

ComplexMatrix SpectralDecomposition::reassemble() const {
  return unitary * eigenvalues.cast<Complex>().asDiagonal() * unitary.adjoint();
}

SpectralDecomposition hermitian_eigen(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "Hermitian eigensolver failed");
  }
  // Eigen sorts ascending.
  const Eigen::Index d = a.dim();
  SpectralDecomposition out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.unitary = solver.eigenvectors().rowwise().reverse();
  if (!out.eigenvalues.allFinite() || !out.unitary.allFinite()) {
    throw Error(ErrorKind::ConvergenceFailure,
                "Hermitian eigensolver produced non-finite output (d=" +
                    std::to_string(d) + ")");
  }
  return out;
}

namespace {

bool is_nonnegative_integer(Complex z) {
  return z.imag() == 0.0 && z.real() >= 0.0 && std::floor(z.real()) == z.real();
}

}  // namespace

ComplexMatrix matrix_power(const SpectralDecomposition& eig, Complex z) {
  const Eigen::Index d = eig.dim();
  const double top = d > 0 ? std::max(1.0, std::abs(eig.eigenvalues(0))) : 1.0;
  const bool integer = is_nonnegative_integer(z);
  Eigen::VectorXcd f(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    double lambda = eig.eigenvalues(i);
    if (lambda < -tol::kFaithful * top) {
      throw Error(ErrorKind::NotPositive,
                  "matrix_power needs a positive semidefinite base, found "
                  "eigenvalue " + std::to_string(lambda));
    }
    lambda = std::max(lambda, 0.0);
    if (integer) {
      f(i) = std::pow(lambda, static_cast<int>(z.real()));
    } else if (lambda >= tol::kFaithful) {
      f(i) = std::exp(z * std::log(lambda));
    } else if (z.real() < 0.0) {
      throw Error(ErrorKind::SingularPower,
                  "exponent with negative real part requested of a matrix "
                  "with eigenvalue below the faithfulness floor");
    } else {
      f(i) = 0.0;
    }
  }
  return eig.unitary * f.asDiagonal() * eig.unitary.adjoint();
}

ComplexMatrix matrix_power(const HermitianMatrix& a, Complex z) {
  return matrix_power(hermitian_eigen(a), z);
}

ComplexMatrix support_projection(const SpectralDecomposition& eig) {
  Eigen::VectorXcd mask(eig.dim());
  for (Eigen::Index i = 0; i < eig.dim(); ++i) {
    mask(i) = eig.eigenvalues(i) >= tol::kFaithful ? 1.0 : 0.0;
  }
  return eig.unitary * mask.asDiagonal() * eig.unitary.adjoint();
}

RealVector singular_values(const ComplexMatrix& x) {
  require_square_finite(x, "singular_values input");
  Eigen::JacobiSVD<ComplexMatrix> svd(x);
  if (svd.info() != Eigen::Success || !svd.singularValues().allFinite()) {
    throw Error(ErrorKind::ConvergenceFailure, "SVD failed");
  }
  return svd.singularValues();
}

double operator_norm(const ComplexMatrix& x) { return singular_values(x)(0); }

PolarDecomposition polar(const ComplexMatrix& x) {
  require_square_finite(x, "polar input");
  Eigen::JacobiSVD<ComplexMatrix> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "SVD failed");
  }
  const RealVector& s = svd.singularValues();
  const ComplexMatrix& w = svd.matrixU();
  const ComplexMatrix& v = svd.matrixV();
  const Eigen::Index d = x.rows();
  const double cutoff = tol::kRelativeZero * s(0);
  Eigen::Index rank = 0;
  while (rank < d && s(rank) > cutoff) ++rank;

  ComplexMatrix u = w.leftCols(rank) * v.leftCols(rank).adjoint();
  ComplexMatrix absx = v * s.cast<Complex>().asDiagonal() * v.adjoint();
  return {std::move(u), HermitianMatrix(0.5 * (absx + absx.adjoint()))};
}

FaithfulState::FaithfulState(const HermitianMatrix& density)
    : density_(density), eigen_(hermitian_eigen(density)) {
  const double trace = density_.matrix().trace().real();
  if (std::abs(trace - 1.0) > tol::kTrace) {
    throw Error(ErrorKind::NotNormalized,
                "state trace " + std::to_string(trace) + " differs from 1");
  }
  const double min_eig = eigen_.eigenvalues(eigen_.dim() - 1);
  if (min_eig < tol::kFaithful) {
    throw Error(ErrorKind::NotFaithful,
                "state has eigenvalue " + std::to_string(min_eig) +
                    " below the faithfulness floor");
  }
}

FaithfulState FaithfulState::maximally_mixed(Eigen::Index dim) {
  ComplexMatrix m = ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
  return FaithfulState(HermitianMatrix(m));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace qlp
