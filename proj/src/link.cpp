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

#include "qcomb/link.hpp"

#include <algorithm>
#include <numeric>

#include "qcomb/tensor.hpp"

namespace qcomb {

LabeledOperator::LabeledOperator(std::vector<int> labels, std::vector<int> dims,
                                 ComplexMatrix matrix)
    : labels_(std::move(labels)), dims_(std::move(dims)), matrix_(std::move(matrix)) {
  if (labels_.size() != dims_.size())
    throw DimensionError("LabeledOperator: one dimension per label required");
  {
    std::vector<int> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DimensionError("LabeledOperator: duplicate wire label");
  }
  const SystemDims sys(dims_);
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() != sys.total())
    throw DimensionError("LabeledOperator: matrix size does not match wire dimensions");

  // Normalize to ascending-label factor order.
  if (!std::is_sorted(labels_.begin(), labels_.end())) {
    std::vector<int> perm(labels_.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return labels_[static_cast<std::size_t>(a)] <
                                         labels_[static_cast<std::size_t>(b)]; });
    matrix_ = permute_systems(matrix_, sys, perm);
    std::vector<int> new_labels(labels_.size()), new_dims(dims_.size());
    for (std::size_t p = 0; p < perm.size(); ++p) {
      new_labels[p] = labels_[static_cast<std::size_t>(perm[p])];
      new_dims[p] = dims_[static_cast<std::size_t>(perm[p])];
    }
    labels_ = std::move(new_labels);
    dims_ = std::move(new_dims);
  }
}

bool LabeledOperator::has_label(int label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

int LabeledOperator::dim_of(int label) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label)
    throw DimensionError("LabeledOperator: no such wire label");
  return dims_[static_cast<std::size_t>(it - labels_.begin())];
}

namespace {

// Embed an operator into the union label space: kron with identities on the
// missing labels, then permute so factors follow the ascending union order.
ComplexMatrix embed(const LabeledOperator& op, const std::vector<int>& union_labels,
                    const std::vector<int>& union_dims) {
  Index missing_dim = 1;
  for (std::size_t i = 0; i < union_labels.size(); ++i)
    if (!op.has_label(union_labels[i])) missing_dim *= union_dims[i];

  ComplexMatrix grown = kron(op.matrix(), ComplexMatrix::Identity(missing_dim, missing_dim));

  // Factor order of `grown`: op's labels ascending, then the missing labels
  // ascending. Build the permutation into full ascending order.
  std::vector<int> order = op.labels();
  std::vector<int> grown_dims = op.dims();
  for (std::size_t i = 0; i < union_labels.size(); ++i) {
    if (!op.has_label(union_labels[i])) {
      order.push_back(union_labels[i]);
      grown_dims.push_back(union_dims[i]);
    }
  }
  std::vector<int> perm;
  perm.reserve(union_labels.size());
  for (int label : union_labels) {
    const auto it = std::find(order.begin(), order.end(), label);
    perm.push_back(static_cast<int>(it - order.begin()));
  }
  return permute_systems(grown, SystemDims(grown_dims), perm);
}

}  // namespace

LabeledOperator link(const LabeledOperator& A, const LabeledOperator& B) {
  // Union label space, ascending.
  std::vector<int> union_labels = A.labels();
  for (int label : B.labels())
    if (!A.has_label(label)) union_labels.push_back(label);
  std::sort(union_labels.begin(), union_labels.end());

  std::vector<int> union_dims;
  std::vector<int> shared_positions;
  for (std::size_t i = 0; i < union_labels.size(); ++i) {
    const int label = union_labels[i];
    if (A.has_label(label) && B.has_label(label)) {
      if (A.dim_of(label) != B.dim_of(label))
        throw DimensionError("link: dimension mismatch on shared wire label " +
                             std::to_string(label));
      shared_positions.push_back(static_cast<int>(i));
    }
    union_dims.push_back(A.has_label(label) ? A.dim_of(label) : B.dim_of(label));
  }

  const SystemDims sys(union_dims);
  const ComplexMatrix a = partial_transpose(embed(A, union_labels, union_dims), sys,
                                            shared_positions);
  const ComplexMatrix b = embed(B, union_labels, union_dims);
  const ComplexMatrix product = a * b;

  if (shared_positions.empty())
    return LabeledOperator(union_labels, union_dims, product);

  const ComplexMatrix traced = partial_trace(product, sys, shared_positions);
  std::vector<int> out_labels, out_dims;
  for (std::size_t i = 0; i < union_labels.size(); ++i) {
    if (!std::binary_search(shared_positions.begin(), shared_positions.end(),
                            static_cast<int>(i))) {
      out_labels.push_back(union_labels[i]);
      out_dims.push_back(union_dims[i]);
    }
  }
  return LabeledOperator(out_labels, out_dims, traced);
}

LabeledOperator choi_of_unitary(const ComplexMatrix& U, int out_label, int in_label,
                                double tol) {
  if (U.rows() != U.cols()) throw DimensionError("choi_of_unitary: matrix must be square");
  if (out_label == in_label)
    throw DimensionError("choi_of_unitary: output and input labels must differ");
  const Index d = U.rows();
  if ((U.adjoint() * U - ComplexMatrix::Identity(d, d)).norm() > tol)
    throw NumericalError("choi_of_unitary: input is not unitary within tolerance");

  const ComplexVector v = vectorize(U);  // row (output) index most significant
  return LabeledOperator({out_label, in_label},
                         {static_cast<int>(d), static_cast<int>(d)}, v * v.adjoint());
}

}  // namespace qcomb
