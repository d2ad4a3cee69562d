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

#ifndef QLP_RANDOM_HPP
#define QLP_RANDOM_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

#include "qlp/spectral.hpp"

namespace qlp {

// Counter-based generator: the n-th output is a SplitMix64 finalisation of
// key + n * golden-gamma, so a stream is fully determined by its key and can
// be recreated anywhere without shared state.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t key) : key_(key) {}

  // Stream for one trial of a suite: keyed by (seed, suite id, dim, trial).
  static RandomStream for_trial(std::uint64_t seed, std::string_view suite,
                                std::uint64_t dim, std::uint64_t trial,
                                std::uint64_t attempt = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  double uniform();                 // [0, 1)
  std::size_t index(std::size_t n);  // uniform in [0, n)
  double normal();
  // Standard complex Gaussian, E|z|^2 = 1.
  Complex complex_normal();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

std::uint64_t mix64(std::uint64_t x);
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ull);

// d x d matrix of independent standard complex Gaussians.
ComplexMatrix ginibre(Eigen::Index d, RandomStream& rng);
// d x r Ginibre factor.
ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, RandomStream& rng);
// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix haar_unitary(Eigen::Index d, RandomStream& rng);
// Wishart matrix G G* with G of size d x rank.
HermitianMatrix random_psd(Eigen::Index d, RandomStream& rng, Eigen::Index rank);

// W = G G* + 1e-3 d I with G Ginibre, normalised to unit trace. The smallest
// eigenvalue is at least 1e-3 d / tr W, far above the faithfulness floor.
FaithfulState sample_faithful_state(Eigen::Index d, RandomStream& rng);

}  // namespace qlp

#endif  // QLP_RANDOM_HPP
