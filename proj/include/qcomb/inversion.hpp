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

#ifndef QCOMB_INVERSION_HPP
#define QCOMB_INVERSION_HPP

#include <array>
#include <cstdint>
#include <utility>

#include "qcomb/comb.hpp"
#include "qcomb/types.hpp"

// The unitary-inversion game on four wires of equal dimension d: wire 0 is
// the initial input, wire 1 feeds the unknown unitary, wire 2 returns its
// output, wire 3 is the final output that should carry U^{-1} applied to
// wire 0. Combs covariant under U on wires (3,1) and W on wires (2,0)
// decompose over the symmetric/antisymmetric projector pairs, which reduces
// the optimization of the average gate fidelity to a tiny linear program.

namespace qcomb {

// Coefficients of a covariant comb over the projector basis,
// C = sum_{mu,nu} a[mu][nu] P^mu_(31) (x) P^nu_(20); index 0 = symmetric,
// 1 = antisymmetric.
struct CovariantCoefficients {
  std::array<std::array<double, 2>, 2> a{};
  int d = 0;

  int d_plus() const { return d * (d + 1) / 2; }
  int d_minus() const { return d * (d - 1) / 2; }
  int block_dim(int mu) const { return mu == 0 ? d_plus() : d_minus(); }
};

// Projectors onto the symmetric and antisymmetric subspace of C^d (x) C^d.
std::pair<ComplexMatrix, ComplexMatrix> symmetry_projectors(int d);

// The optimal inverter C = P+(31) (x) P+(20)/d_+ + P-(31) (x) P-(20)/d_-,
// stored in canonical ascending wire order; passes verify_comb at 1e-12.
QuantumComb optimal_inversion_comb(int d);

// Projection coefficients of any 4-wire comb onto the covariant basis.
CovariantCoefficients covariant_coefficients(const QuantumComb& comb);

// Exact group average over U (x) W (x) U (x) W conjugations, computed by
// projecting onto the commutant basis (no sampling); idempotent, preserves
// causal normalization, and leaves the average gate fidelity unchanged.
QuantumComb twirl(const QuantumComb& comb);

// F(C,U) = <<U^dag|_30 <<U^*|_21 C |U^dag>>_30 |U^*>>_21 / d^2, the channel
// fidelity between the comb linked with the unitary channel U and the ideal
// inverse channel.
double gate_fidelity(const QuantumComb& comb, const ComplexMatrix& U,
                     double tol = default_unitary_tol);

// Exact Haar-average fidelity of a covariant comb; rejects non-covariant
// input (twirl first, the average is unchanged).
double average_fidelity_covariant(const QuantumComb& comb, double tol = default_verify_tol);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

// Haar Monte-Carlo estimate of the average gate fidelity. Deterministic for
// a fixed seed; samples draw per-index sub-seeds so a parallel fan-out would
// produce identical results. Sampling U(d) is equivalent to SU(d) here since
// the fidelity is invariant under a global phase of U.
MonteCarloEstimate average_fidelity_mc(const QuantumComb& comb, std::size_t n,
                                       std::uint64_t seed);

// Maximizes the average fidelity over covariant combs:
// max (1/d^2) sum_nu a^{nu nu} d_nu subject to sum_mu a^{mu nu} d_mu = 1 and
// a >= 0. The program decouples per column and the optimum is closed-form,
// a^{mu nu} = delta_{mu nu}/d_mu with value 2/d^2.
std::pair<CovariantCoefficients, double> optimize_covariant(int d);

}  // namespace qcomb

#endif  // QCOMB_INVERSION_HPP
