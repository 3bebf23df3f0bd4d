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

#ifndef QCOMB_SYNTHESIS_HPP
#define QCOMB_SYNTHESIS_HPP

#include <cstdint>
#include <vector>

#include "qcomb/comb.hpp"
#include "qcomb/types.hpp"

namespace qcomb {

// One isometry of the sequential realization, mapping tooth input (x) ancilla
// to tooth output (x) ancilla. On both sides the system factor is the most
// significant index and the ancilla the least significant one.
struct IsometryStep {
  int k = 0;  // tooth index, 1-based
  int d_in = 0;
  int d_out = 0;
  Index r_prev = 0;
  Index r_next = 0;
  ComplexMatrix matrix;  // (d_out*r_next) x (d_in*r_prev), V^dag V = I
};

// Ordered isometry chain realizing a comb with the smallest ancilla at every
// step: r_k is the numerical rank of the reduced comb C^(k). ancilla_bases[k-1]
// records the orthonormal basis of Supp(C^(k)*) inside the full doubled space
// that step k's ancilla indices refer to (identity for generated networks,
// whose ancillas carry no embedding).
struct SynthesizedNetwork {
  WireLayout layout;
  std::vector<Index> ancilla_dims;      // [r_0 = 1, r_1, ..., r_N]
  std::vector<IsometryStep> steps;      // size N
  std::vector<ComplexMatrix> ancilla_bases;  // size N
};

// Consistency of the dimension bookkeeping across steps; throws on violation.
void validate_network(const SynthesizedNetwork& net);

// Extracts the minimal-ancilla isometry sequence from a causally normalized
// comb. Refuses combs failing verify_comb at tol; rank_eps controls the
// numerical rank of the reduced combs and hence the ancilla dimensions.
SynthesizedNetwork synthesize(const QuantumComb& comb, double tol = default_verify_tol,
                              double rank_eps = default_rank_eps);

// Total isometry W = V^(N) ... V^(1) from the full input space to the full
// output space tensor the last ancilla. Row factors are the odd wires in
// ascending order followed by the ancilla; column factors are the even wires
// in ascending order.
ComplexMatrix network_isometry(const SynthesizedNetwork& net);

// Choi operator of the network in canonical ascending-label ordering:
// the final ancilla of |W>><<W| traced out.
ComplexMatrix reconstruct_choi(const SynthesizedNetwork& net);

// Runs the network on an input state (factors: even wires ascending) and
// returns the output state (factors: odd wires ascending).
ComplexMatrix apply_network(const SynthesizedNetwork& net, const ComplexMatrix& rho,
                            double tol = default_verify_tol);

// Network of Haar-random isometry steps with the given ancilla dimensions
// (r_1..r_N); deterministic for a fixed seed. Used as an independent source
// of valid combs with known ancilla cost.
SynthesizedNetwork random_network(const WireLayout& layout, const std::vector<Index>& ancilla,
                                  std::uint64_t seed);

}  // namespace qcomb

#endif  // QCOMB_SYNTHESIS_HPP
