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

#ifndef QLP_SPECTRAL_HPP
#define QLP_SPECTRAL_HPP

#include <complex>
#include <span>
#include <string_view>

#include <Eigen/Dense>

namespace qlp {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
// Smallest eigenvalue a state may have and still count as faithful. Also the
// threshold below which an eigenvalue is treated as zero by matrix_power.
inline constexpr double kFaithful = 1e-10;
// Hermiticity defect allowed, relative to the largest entry.
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kUnitary = 1e-10;
// Reassembly error allowed, relative to the operator norm of the input.
inline constexpr double kRecon = 1e-10;
// Singular values below this fraction of the largest are exact zeros.
inline constexpr double kRelativeZero = 1e-14;
}  // namespace tol

// Throws DimensionMismatch / InvalidArgument unless m is square, non-empty and
// finite.
void require_square_finite(const ComplexMatrix& m, std::string_view what);

double max_abs_entry(const ComplexMatrix& m);

// A dense self-adjoint matrix. Construction checks the Hermiticity defect and
// stores the exact Hermitian part (a + a*)/2.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& m);

  static HermitianMatrix identity(Eigen::Index dim);
  static HermitianMatrix diagonal(std::span<const double> entries);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }

 private:
  struct Unchecked {};
  HermitianMatrix(Unchecked, ComplexMatrix m) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

struct SpectralDecomposition {
  RealVector eigenvalues;  // descending
  ComplexMatrix unitary;   // columns are the matching eigenvectors

  ComplexMatrix reassemble() const;
  Eigen::Index dim() const noexcept { return eigenvalues.size(); }
};

SpectralDecomposition hermitian_eigen(const HermitianMatrix& a);

// Principal power a^z of a positive semidefinite matrix. Eigenvalues below
// tol::kFaithful count as zero: 0^0 = 1, 0^z = 0 for Re z >= 0 (z != 0), and a
// SingularPower error for Re z < 0. Nonnegative integer exponents use the
// eigenvalues as they are.
ComplexMatrix matrix_power(const HermitianMatrix& a, Complex z);
ComplexMatrix matrix_power(const SpectralDecomposition& eig, Complex z);

// Orthogonal projection onto the span of eigenvectors with eigenvalue at least
// tol::kFaithful.
ComplexMatrix support_projection(const SpectralDecomposition& eig);

RealVector singular_values(const ComplexMatrix& x);
double operator_norm(const ComplexMatrix& x);

struct PolarDecomposition {
  ComplexMatrix u;      // partial isometry, u*u = support projection of absx
  HermitianMatrix absx; // (x*x)^{1/2}
};

PolarDecomposition polar(const ComplexMatrix& x);

// Strictly positive density matrix with unit trace, together with its cached
// spectral decomposition.
class FaithfulState {
 public:
  explicit FaithfulState(const HermitianMatrix& density);

  static FaithfulState maximally_mixed(Eigen::Index dim);

  const HermitianMatrix& density() const noexcept { return density_; }
  const ComplexMatrix& matrix() const noexcept { return density_.matrix(); }
  const SpectralDecomposition& eigen() const noexcept { return eigen_; }
  Eigen::Index dim() const noexcept { return density_.dim(); }

  // sigma^z; defined for every complex z since sigma is faithful.
  ComplexMatrix power(Complex z) const { return matrix_power(eigen_, z); }

 private:
  HermitianMatrix density_;
  SpectralDecomposition eigen_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qlp

#endif  // QLP_SPECTRAL_HPP
