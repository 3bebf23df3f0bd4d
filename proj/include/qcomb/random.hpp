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

#ifndef QCOMB_RANDOM_HPP
#define QCOMB_RANDOM_HPP

#include <cstdint>
#include <random>

#include "qcomb/types.hpp"

namespace qcomb {

// Haar-distributed d x d unitary: QR of a complex Ginibre matrix with the
// triangular factor's diagonal phases pushed into Q, which makes the law
// exactly left- and right-invariant. The generator is caller-owned.
ComplexMatrix haar_unitary(int d, std::mt19937_64& rng);

// Seeded convenience overload; identical seeds give identical matrices.
ComplexMatrix haar_unitary(int d, std::uint64_t seed);

// Stateless per-index sub-seed derivation (splitmix64 finalizer), so that
// sample streams can be fanned out deterministically.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace qcomb

#endif  // QCOMB_RANDOM_HPP
