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

// Shared test fixtures and brute-force oracles. The oracles deliberately use
// naive index arithmetic, independent of the library's stride-based kernels.

#ifndef QCOMB_TEST_SUPPORT_HPP
#define QCOMB_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "qcomb/comb.hpp"
#include "qcomb/link.hpp"
#include "qcomb/synthesis.hpp"
#include "qcomb/tensor.hpp"
#include "qcomb/types.hpp"

namespace qcomb::test {

inline ComplexMatrix rand_matrix(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline ComplexMatrix rand_hermitian(Index n, std::mt19937_64& rng) {
  const ComplexMatrix a = rand_matrix(n, n, rng);
  return 0.5 * (a + a.adjoint());
}

inline ComplexMatrix rand_psd(Index n, std::mt19937_64& rng) {
  const ComplexMatrix a = rand_matrix(n, n, rng);
  return a * a.adjoint();
}

// Digit decomposition of a flat tensor index, first factor most significant.
inline std::vector<Index> digits_of(Index v, const std::vector<int>& dims) {
  std::vector<Index> out(dims.size());
  for (int f = static_cast<int>(dims.size()) - 1; f >= 0; --f) {
    out[static_cast<std::size_t>(f)] = v % dims[static_cast<std::size_t>(f)];
    v /= dims[static_cast<std::size_t>(f)];
  }
  return out;
}

// Element-wise-sum partial trace: walks every entry of M and accumulates the
// ones whose traced digits coincide on the row and column side.
inline ComplexMatrix brute_partial_trace(const ComplexMatrix& m, const std::vector<int>& dims,
                                         const std::vector<int>& traced) {
  std::vector<int> kept_dims;
  std::vector<bool> is_traced(dims.size(), false);
  for (int t : traced) is_traced[static_cast<std::size_t>(t)] = true;
  for (std::size_t f = 0; f < dims.size(); ++f)
    if (!is_traced[f]) kept_dims.push_back(dims[f]);

  Index kept_total = 1;
  for (int d : kept_dims) kept_total *= d;
  ComplexMatrix out = ComplexMatrix::Zero(kept_total, kept_total);

  for (Index i = 0; i < m.rows(); ++i) {
    const std::vector<Index> di = digits_of(i, dims);
    for (Index j = 0; j < m.cols(); ++j) {
      const std::vector<Index> dj = digits_of(j, dims);
      bool diagonal = true;
      for (std::size_t f = 0; f < dims.size(); ++f)
        if (is_traced[f] && di[f] != dj[f]) diagonal = false;
      if (!diagonal) continue;
      Index ri = 0, rj = 0;
      for (std::size_t f = 0; f < dims.size(); ++f) {
        if (is_traced[f]) continue;
        ri = ri * dims[f] + di[f];
        rj = rj * dims[f] + dj[f];
      }
      out(ri, rj) += m(i, j);
    }
  }
  return out;
}

// |I>><<I| on d x d, the Choi operator of the identity channel.
inline ComplexMatrix max_ent_projector(int d) {
  const ComplexVector v = vectorize(ComplexMatrix::Identity(d, d));
  return v * v.adjoint();
}

inline QuantumComb identity_comb(int d) {
  return QuantumComb(WireLayout({d, d}), max_ent_projector(d));
}

// Contraction of the network's step Choi operators through the link product,
// an implementation path independent of network_isometry/reconstruct_choi.
// Ancilla wires carry labels 2N+k; the first (trivial) and last ancilla are
// traced out at the end.
inline ComplexMatrix comb_via_link(const SynthesizedNetwork& net) {
  const int N = net.layout.num_teeth();
  std::vector<LabeledOperator> chois;
  for (int k = 1; k <= N; ++k) {
    const IsometryStep& step = net.steps[static_cast<std::size_t>(k) - 1];
    const ComplexVector v = vectorize(step.matrix);
    chois.emplace_back(
        std::vector<int>{2 * k - 1, 2 * N + k, 2 * k - 2, 2 * N + k - 1},
        std::vector<int>{step.d_out, static_cast<int>(step.r_next), step.d_in,
                         static_cast<int>(step.r_prev)},
        ComplexMatrix(v * v.adjoint()));
  }
  LabeledOperator acc = chois.front();
  for (std::size_t k = 1; k < chois.size(); ++k) acc = link(acc, chois[k]);

  // Remaining labels: wires 0..2N-1, then 2N (trivial first ancilla) and
  // 3N (final ancilla), which sit at the last two factor positions.
  return partial_trace(acc.matrix(), SystemDims(acc.dims()), {2 * N, 2 * N + 1});
}

// Channel action through the Choi operator and the link product: the state
// enters on the even wires, the result lives on the odd wires.
inline ComplexMatrix choi_action_via_link(const ComplexMatrix& choi, const WireLayout& layout,
                                          const ComplexMatrix& rho) {
  std::vector<int> all_labels, all_dims, even_labels, even_dims;
  for (int w = 0; w < layout.num_wires(); ++w) {
    all_labels.push_back(w);
    all_dims.push_back(layout.dim(w));
    if (w % 2 == 0) {
      even_labels.push_back(w);
      even_dims.push_back(layout.dim(w));
    }
  }
  const LabeledOperator comb_op(all_labels, all_dims, choi);
  const LabeledOperator state_op(even_labels, even_dims, rho);
  return link(state_op, comb_op).matrix();
}

}  // namespace qcomb::test

#endif  // QCOMB_TEST_SUPPORT_HPP
