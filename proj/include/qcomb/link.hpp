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

#ifndef QCOMB_LINK_HPP
#define QCOMB_LINK_HPP

#include <vector>

#include "qcomb/types.hpp"

namespace qcomb {

// Operator on a set of labeled wires. Factors are kept sorted by ascending
// label (lowest label most significant); the constructor accepts any factor
// order and permutes into that normal form. Connected wires of two operators
// are identified by carrying the same label.
class LabeledOperator {
 public:
  // `labels[i]` / `dims[i]` describe the i-th tensor factor of `matrix`.
  LabeledOperator(std::vector<int> labels, std::vector<int> dims, ComplexMatrix matrix);

  const std::vector<int>& labels() const { return labels_; }  // ascending
  const std::vector<int>& dims() const { return dims_; }
  const ComplexMatrix& matrix() const { return matrix_; }

  bool has_label(int label) const;
  int dim_of(int label) const;

 private:
  std::vector<int> labels_;
  std::vector<int> dims_;
  ComplexMatrix matrix_;
};

// Link product A * B = Tr_K[ A^{theta_K} B ]: both operands are embedded in
// the union label space, A is partially transposed on the shared labels K,
// the product is taken and the shared labels are traced out. The result acts
// on the symmetric difference of the label sets.
LabeledOperator link(const LabeledOperator& A, const LabeledOperator& B);

// |U>><<U| on the (out_label, in_label) wire pair; trace equals dim(U).
LabeledOperator choi_of_unitary(const ComplexMatrix& U, int out_label, int in_label,
                                double tol = default_unitary_tol);

}  // namespace qcomb

#endif  // QCOMB_LINK_HPP
