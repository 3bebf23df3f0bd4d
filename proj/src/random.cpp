// Copyright 2026 The qcomb developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcomb/random.hpp"

#include <cmath>

namespace qcomb {

ComplexMatrix haar_unitary(int d, std::mt19937_64& rng) {
  if (d < 1) throw DimensionError("haar_unitary: dimension must be positive");
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix A(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      A(i, j) = Complex(re, im);
    }

  Eigen::HouseholderQR<ComplexMatrix> qr(A);
  ComplexMatrix Q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index i = 0; i < d; ++i) {
    const Complex r = R(i, i);
    const double a = std::abs(r);
    Q.col(i) *= a > 0.0 ? r / a : Complex(1.0, 0.0);
  }
  return Q;
}

ComplexMatrix haar_unitary(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_unitary(d, rng);
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace qcomb
