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

#ifndef QCOMB_EIG_HPP
#define QCOMB_EIG_HPP

#include "qcomb/types.hpp"

namespace qcomb {

// Hermitian eigendecomposition with eigenvalues sorted descending and the
// eigenvector columns aligned to them.
struct EigDecomposition {
  RealVector eigenvalues;      // sorted descending
  ComplexMatrix eigenvectors;  // orthonormal columns
};

// Throws NumericalError unless ||M - M^dag||_F <= tol * ||M||_F. Eigenvector
// phases are fixed by making the largest-magnitude component real positive
// (first such component on ties); within a degenerate cluster the basis
// choice is otherwise unconstrained and callers must not depend on it.
EigDecomposition hermitian_eig(const ComplexMatrix& M, double tol = default_herm_tol);

// Principal square root of a Hermitian PSD matrix. Eigenvalues in
// [-tol*lambda_max, 0) are clipped to zero; anything lower throws.
ComplexMatrix psd_sqrt(const ComplexMatrix& M, double tol = default_herm_tol);

// Pseudo-inverse square root: eigenvalues above rank_eps*lambda_max are
// inverted after the square root, the rest map to zero, so that
// psd_sqrt(M) * psd_pinv_sqrt(M) is the projector onto the support of M.
ComplexMatrix psd_pinv_sqrt(const ComplexMatrix& M, double tol = default_herm_tol,
                            double rank_eps = default_rank_eps);

// d x r matrix whose orthonormal columns span the eigenspaces with
// eigenvalue > rank_eps*lambda_max; r is the numerical rank. The zero matrix
// yields a valid d x 0 basis.
ComplexMatrix support_basis(const ComplexMatrix& M, double tol = default_herm_tol,
                            double rank_eps = default_rank_eps);

}  // namespace qcomb

#endif  // QCOMB_EIG_HPP
