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

#ifndef QCOMB_TENSOR_HPP
#define QCOMB_TENSOR_HPP

#include <set>
#include <vector>

#include "qcomb/types.hpp"

// Dense tensor-factor primitives with one fixed ordering convention:
//
//   * multi-factor indices are read with the FIRST factor most significant,
//     i.e. kron(A, B) puts A on the most significant index slice;
//   * |A>> = sum_{nm} A(n,m) |n>|m> with the row index n more significant.
//
// Every operator in this library is stored with its tensor factors sorted by
// ascending wire label, the lowest label being the most significant factor.

namespace qcomb {

// Kronecker product; the first argument is the most significant factor:
// (A (x) B)[(iA*rowsB + iB), (jA*colsB + jB)] = A(iA,jA) * B(iB,jB).
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename Eigen::ScalarBinaryOpTraits<
                  typename DerivedA::Scalar, typename DerivedB::Scalar>::ReturnType,
              Eigen::Dynamic, Eigen::Dynamic>
kron(const Eigen::MatrixBase<DerivedA>& A, const Eigen::MatrixBase<DerivedB>& B) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DerivedA::Scalar,
                                                      typename DerivedB::Scalar>::ReturnType;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(A.rows() * B.rows(),
                                                            A.cols() * B.cols());
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j)
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return out;
}

// Index map realizing a factor reordering: entry [new_index] is the old flat
// index, so `out(v) = in(map[v])` permutes a vector's factors. perm[p] = q
// means the factor at old position q lands at new position p; composing
// (p after q) is perm[i] = q[p[i]].
std::vector<Index> permuted_indices(const SystemDims& dims, const std::vector<int>& perm);

// Conjugates a square operator by the factor permutation: the result acts on
// the factors reordered by perm. permute_systems(kron(A,B), {dA,dB}, {1,0})
// equals kron(B,A).
ComplexMatrix permute_systems(const ComplexMatrix& M, const SystemDims& dims,
                              const std::vector<int>& perm);

// Partial trace over the factors at `traced` positions; the remaining factors
// keep their original relative order. Tracing every factor yields the 1x1
// matrix holding the full trace.
ComplexMatrix partial_trace(const ComplexMatrix& M, const SystemDims& dims,
                            const std::vector<int>& traced);

// Transposition applied only on the factors at `positions`; involutive.
ComplexMatrix partial_transpose(const ComplexMatrix& M, const SystemDims& dims,
                                const std::vector<int>& positions);

// |A>> = sum_{nm} A(n,m) |n>|m>, row index most significant.
ComplexVector vectorize(const ComplexMatrix& A);

// Inverse of vectorize for a rows x cols target.
ComplexMatrix unvectorize(const ComplexVector& v, Index rows, Index cols);

// Square-shape convenience; the length must be a perfect square.
ComplexMatrix unvectorize(const ComplexVector& v);

// ||A - B||_F with a shape check.
double frobenius_distance(const ComplexMatrix& A, const ComplexMatrix& B);

}  // namespace qcomb

#endif  // QCOMB_TENSOR_HPP
