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

#include "qlp/random.hpp"

#include <cmath>

namespace qlp {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

RandomStream RandomStream::for_trial(std::uint64_t seed, std::string_view suite,
                                     std::uint64_t dim, std::uint64_t trial,
                                     std::uint64_t attempt) {
  std::uint64_t key = mix64(seed + kGamma);
  key = mix64(key ^ fnv1a(suite));
  key = mix64(key ^ (dim * kGamma));
  key = mix64(key ^ mix64(trial + 1));
  key = mix64(key ^ mix64(attempt + 0x51ed27ull));
  return RandomStream(key);
}

RandomStream::result_type RandomStream::operator()() {
  ++counter_;
  return mix64(key_ + counter_ * kGamma);
}

double RandomStream::uniform() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

std::size_t RandomStream::index(std::size_t n) {
  return static_cast<std::size_t>(uniform() * static_cast<double>(n));
}

double RandomStream::normal() { return normal_(*this); }

Complex RandomStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * M_SQRT1_2;
}

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, RandomStream& rng) {
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  }
  return g;
}

ComplexMatrix ginibre(Eigen::Index d, RandomStream& rng) { return ginibre(d, d, rng); }

ComplexMatrix haar_unitary(Eigen::Index d, RandomStream& rng) {
  const ComplexMatrix g = ginibre(d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

HermitianMatrix random_psd(Eigen::Index d, RandomStream& rng, Eigen::Index rank) {
  const ComplexMatrix g = ginibre(d, rank, rng);
  return HermitianMatrix(g * g.adjoint());
}

FaithfulState sample_faithful_state(Eigen::Index d, RandomStream& rng) {
  const ComplexMatrix g = ginibre(d, rng);
  ComplexMatrix w = g * g.adjoint();
  w.diagonal().array() += 1e-3 * static_cast<double>(d);
  w /= w.trace().real();
  return FaithfulState(HermitianMatrix(w));
}

}  // namespace qlp
