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

#include "qcomb/eig.hpp"

#include <cmath>

namespace qcomb {

namespace {

// Checked clip of slightly negative eigenvalues of a nominally PSD matrix.
RealVector clip_psd_eigenvalues(const RealVector& lambda, double tol, const char* op) {
  const double lambda_max = lambda.size() > 0 ? std::max(lambda(0), 0.0) : 0.0;
  RealVector out = lambda;
  for (Index i = 0; i < out.size(); ++i) {
    if (out(i) < -tol * lambda_max)
      throw NumericalError(std::string(op) + ": eigenvalue " + std::to_string(out(i)) +
                           " below the PSD tolerance");
    if (out(i) < 0.0) out(i) = 0.0;
  }
  return out;
}

}  // namespace

EigDecomposition hermitian_eig(const ComplexMatrix& M, double tol) {
  if (M.rows() != M.cols()) throw DimensionError("hermitian_eig: matrix must be square");
  const double scale = M.norm();
  if ((M - M.adjoint()).norm() > tol * std::max(scale, 1e-300))
    throw NumericalError("hermitian_eig: input is not Hermitian within tolerance");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(M);
  if (solver.info() != Eigen::Success)
    throw NumericalError("hermitian_eig: eigensolver failed to converge");

  const Index n = M.rows();
  EigDecomposition out;
  out.eigenvalues = RealVector(n);
  out.eigenvectors = ComplexMatrix(n, n);
  // Eigen sorts ascending; flip to descending.
  for (Index i = 0; i < n; ++i) {
    out.eigenvalues(i) = solver.eigenvalues()(n - 1 - i);
    out.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  // Deterministic phases: largest-magnitude component real positive.
  for (Index c = 0; c < n; ++c) {
    Index arg = 0;
    double best = -1.0;
    for (Index r = 0; r < n; ++r) {
      const double a = std::abs(out.eigenvectors(r, c));
      if (a > best + 1e-15) {
        best = a;
        arg = r;
      }
    }
    const Complex z = out.eigenvectors(arg, c);
    if (std::abs(z) > 0.0) out.eigenvectors.col(c) *= std::conj(z) / std::abs(z);
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& M, double tol) {
  const EigDecomposition eig = hermitian_eig(M, tol);
  const RealVector lambda = clip_psd_eigenvalues(eig.eigenvalues, tol, "psd_sqrt");
  return eig.eigenvectors * lambda.cwiseSqrt().asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix psd_pinv_sqrt(const ComplexMatrix& M, double tol, double rank_eps) {
  const EigDecomposition eig = hermitian_eig(M, tol);
  const RealVector lambda = clip_psd_eigenvalues(eig.eigenvalues, tol, "psd_pinv_sqrt");
  const double cutoff = rank_eps * (lambda.size() > 0 ? lambda(0) : 0.0);
  RealVector inv = RealVector::Zero(lambda.size());
  for (Index i = 0; i < lambda.size(); ++i)
    if (lambda(i) > cutoff && lambda(i) > 0.0) inv(i) = 1.0 / std::sqrt(lambda(i));
  return eig.eigenvectors * inv.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix support_basis(const ComplexMatrix& M, double tol, double rank_eps) {
  const EigDecomposition eig = hermitian_eig(M, tol);
  const RealVector lambda = clip_psd_eigenvalues(eig.eigenvalues, tol, "support_basis");
  const double cutoff = rank_eps * (lambda.size() > 0 ? lambda(0) : 0.0);
  Index r = 0;
  while (r < lambda.size() && lambda(r) > cutoff && lambda(r) > 0.0) ++r;
  return eig.eigenvectors.leftCols(r);
}

}  // namespace qcomb
