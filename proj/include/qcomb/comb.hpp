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

#ifndef QCOMB_COMB_HPP
#define QCOMB_COMB_HPP

#include <string>
#include <vector>

#include "qcomb/layout.hpp"
#include "qcomb/types.hpp"

namespace qcomb {

// Choi operator of a sequential network, stored on the full wire space in
// canonical ascending-label ordering. Construction checks shapes only; the
// causal-normalization invariant is checked explicitly by verify_comb.
struct QuantumComb {
  WireLayout layout;
  ComplexMatrix matrix;

  QuantumComb(WireLayout layout_, ComplexMatrix matrix_);
};

// Per-level diagnostics of the recursive normalization
//   Tr_last[C^(k)] = C^(k-1) (x) I_{2k-2},   C^(0) = 1,
// in ascending-label ordering. residuals[k-1] is the level-k Frobenius
// residual for k = 1..N.
struct NormalizationReport {
  std::vector<double> residuals;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  double hermiticity_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  std::string summary() const;
};

// Reduced comb C^(k): all wires with label >= 2k traced out and the result
// divided by the dimensions of the traced *even* wires. factor_residual is
// || Tr_{odd wires >= 2k}[C] - C^(k) (x) I_{even wires >= 2k} ||_F, the
// quantitative failure of the causal factorization at this cut.
struct ReducedComb {
  ComplexMatrix matrix;
  double factor_residual = 0.0;
};

ReducedComb reduced_comb(const QuantumComb& comb, int k);

// Pure diagnostic; never throws on normalization failure, only reports.
NormalizationReport verify_comb(const QuantumComb& comb, double tol = default_verify_tol);

}  // namespace qcomb

#endif  // QCOMB_COMB_HPP
